#pragma once

namespace weylcrit {

/// Dimension bookkeeping for the locally symmetric spaces of O(2n+2) over a
/// totally real field with r_F real embeddings, n even.
struct DimReport {
    long dim_SG = 0;        // r_F (n+1)^2
    long dim_boundary = 0;  // dim_SG - 1
    long dim_SM = 0;        // (r_F - 1) + r_F n^2
    long dim_ScircM = 0;    // r_F n^2
    long dim_UP = 0;        // 2 n r_F
    long q0 = 0;            // n^2 / 2
    long q_m = 0;           // r_F n^2 / 2
    long q_b = 0;           // q_m
    long q_t = 0;           // q_m + r_F - 1
    long frak_q_b = 0;      // q_b + dim_UP / 2
    long frak_q_t = 0;      // q_t + dim_UP / 2
};

DimReport dims(int n, int r_F);

}  // namespace weylcrit
