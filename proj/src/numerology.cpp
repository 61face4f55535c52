#include "weylcrit/numerology.hpp"

#include <stdexcept>

namespace weylcrit {

DimReport dims(int n, int r_F) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("dims: n must be even and >= 2");
    if (r_F < 1) throw std::invalid_argument("dims: r_F must be >= 1");
    const long N = n, R = r_F;
    DimReport d;
    d.dim_SG = R * (N + 1) * (N + 1);
    d.dim_boundary = d.dim_SG - 1;
    d.dim_ScircM = R * N * N;
    d.dim_SM = (R - 1) + d.dim_ScircM;
    d.dim_UP = 2 * N * R;
    d.q0 = N * N / 2;
    d.q_m = R * N * N / 2;
    d.q_b = d.q_m;
    d.q_t = d.q_m + R - 1;
    d.frak_q_b = d.q_b + d.dim_UP / 2;
    d.frak_q_t = d.q_t + d.dim_UP / 2;
    return d;
}

}  // namespace weylcrit
