#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylcrit/critical.hpp"
#include "weylcrit/intertwine.hpp"
#include "weylcrit/numerology.hpp"
#include "weylcrit/pivalue.hpp"
#include "weylcrit/satake.hpp"
#include "weylcrit/weyl.hpp"

namespace py = pybind11;
using namespace weylcrit;

namespace {

CoeffWeight coeff_weight(const std::vector<std::vector<int>>& mu) {
    MultiWeight mw;
    for (const auto& f : mu) mw.factors.push_back(f);
    return CoeffWeight::make(mw);
}

SatakeParam satake_param(const std::vector<std::string>& thetas, const std::string& theta_chi,
                         long q) {
    std::vector<Rational> ts;
    for (const auto& t : thetas) ts.push_back(Rational::parse(t));
    return SatakeParam::make(ts, Rational::parse(theta_chi), q);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact type-D Weyl group, critical-set and intertwining computations";

    py::class_<PiValue>(m, "PiValue")
        .def(py::init([](const std::string& text) { return parse_pi_value(text); }))
        .def_property_readonly("coeff_num", [](const PiValue& v) { return v.coeff.num().get_str(); })
        .def_property_readonly("coeff_den", [](const PiValue& v) { return v.coeff.den().get_str(); })
        .def_readonly("half_pi_exp", &PiValue::half_pi_exp)
        .def("__str__", &PiValue::str)
        .def("__repr__", [](const PiValue& v) { return "PiValue('" + v.str() + "')"; })
        .def("__eq__", [](const PiValue& a, const PiValue& b) { return a == b; })
        .def("__mul__", [](const PiValue& a, const PiValue& b) { return a * b; })
        .def("__truediv__", [](const PiValue& a, const PiValue& b) { return a / b; });

    m.def("gamma_at", [](long two_z) {
        GammaSym g = gamma_at(two_z);
        return py::make_tuple(g.pole_order, g.lead);
    }, py::arg("two_z"), "Gamma at two_z/2 as (pole_order, leading PiValue)");

    m.def("critical_set", [](const std::vector<std::vector<int>>& mu, int d) {
        return critical_set(coeff_weight(mu), CharData::make(d, {})).members;
    }, py::arg("mu"), py::arg("d"));

    m.def("is_critical", [](int m_, const std::vector<std::vector<int>>& mu, int d) {
        return is_critical(m_, coeff_weight(mu), CharData::make(d, {}));
    }, py::arg("m"), py::arg("mu"), py::arg("d"));

    m.def("ratio_L_inf", [](const std::vector<std::vector<int>>& mu, int d) {
        return ratio_L_inf(coeff_weight(mu), CharData::make(d, {}));
    }, py::arg("mu"), py::arg("d"));

    m.def("comb_lemma", [](const std::vector<std::vector<int>>& mu, int d) {
        CombLemmaResult r = comb_lemma(coeff_weight(mu), CharData::make(d, {}));
        py::dict out;
        out["cond_ii"] = r.cond_ii;
        if (r.witness) {
            py::list w;
            for (int s : *r.witness) w.append(s > 0 ? "w+" : "w-");
            out["witness"] = w;
            py::list lam;
            for (const auto& f : r.lambda->factors) lam.append(f);
            out["lambda"] = lam;
        } else {
            out["witness"] = py::none();
            out["lambda"] = py::none();
        }
        return out;
    }, py::arg("mu"), py::arg("d"));

    m.def("kostant_lengths", [](int n) {
        std::vector<int> out;
        for (const auto& w : kostant_reps(n)) out.push_back(length(w));
        return out;
    }, py::arg("n"));

    m.def("balanced_elements", [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto& w : kostant_reps(n))
            if (is_balanced(w, n)) out.push_back(w.signed_images());
        return out;
    }, py::arg("n"));

    m.def("factor_w_P", &factor_w_P, py::arg("n"));

    m.def("dot_action", [](const std::vector<int>& images, const WeightVec& lam) {
        const int m_ = static_cast<int>(images.size());
        std::vector<int> perm(m_), signs(m_);
        for (int i = 0; i < m_; ++i) {
            if (images[i] == 0) throw std::invalid_argument("images are signed, 1-based");
            perm[i] = std::abs(images[i]) - 1;
            signs[i] = images[i] > 0 ? 1 : -1;
        }
        return dot_action(SignedPerm(perm, signs), lam);
    }, py::arg("images"), py::arg("lam"), "twisted action of the signed permutation given by 1-based signed images");

    m.def("weyl_dim_M", [](const WeightVec& lam, int n) {
        return weyl_dim_M(lam, n).get_str();
    }, py::arg("lam"), py::arg("n"));

    m.def("kostant_euler_check", [](const WeightVec& lam, int n) {
        return kostant_euler_check(lam, n).get_str();
    }, py::arg("lam"), py::arg("n"));

    m.def("dims", [](int n, int rf) {
        DimReport d = dims(n, rf);
        py::dict out;
        out["dim_SG"] = d.dim_SG;
        out["dim_boundary"] = d.dim_boundary;
        out["dim_SM"] = d.dim_SM;
        out["dim_ScircM"] = d.dim_ScircM;
        out["dim_UP"] = d.dim_UP;
        out["q0"] = d.q0;
        out["q_m"] = d.q_m;
        out["q_b"] = d.q_b;
        out["q_t"] = d.q_t;
        out["frak_q_b"] = d.frak_q_b;
        out["frak_q_t"] = d.frak_q_t;
        return out;
    }, py::arg("n"), py::arg("rf"));

    m.def("ds_param", [](const WeightVec& mu_v) {
        return ds_param(mu_v, static_cast<int>(mu_v.size())).ells;
    }, py::arg("mu_v"));

    m.def("blattner", [](const WeightVec& mu_v) {
        return blattner(mu_v, static_cast<int>(mu_v.size()));
    }, py::arg("mu_v"));

    m.def("phi_and_c", [](const WeightVec& mu_v, int d, int eps0) {
        PhiCResult r = phi_and_c(mu_v, d, eps0, static_cast<int>(mu_v.size()));
        py::dict out;
        out["c"] = r.c;
        out["phase_sign"] = r.phase_sign;
        out["parity_counts"] = py::make_tuple(r.evens_low, r.evens_high);
        out["net_order"] = r.phi.net_order;
        return out;
    }, py::arg("mu_v"), py::arg("d"), py::arg("eps0") = 0);

    m.def("local_L", [](int s, const std::vector<std::string>& thetas,
                        const std::string& theta_chi, long q) -> py::object {
        auto v = local_L(s, satake_param(thetas, theta_chi, q));
        if (!v) return py::none();
        return py::str(v->str());
    }, py::arg("s"), py::arg("thetas"), py::arg("theta_chi") = "1", py::arg("q") = 2);

    m.def("gk_ratio", [](int s, const std::vector<std::string>& thetas,
                         const std::string& theta_chi, long q) -> py::object {
        auto v = gk_ratio(s, satake_param(thetas, theta_chi, q));
        if (!v) return py::none();
        return py::str(v->str());
    }, py::arg("s"), py::arg("thetas"), py::arg("theta_chi") = "1", py::arg("q") = 2);
}
