// weylcrit command line: every computation behind a subcommand, each emitting
// a canonical JSON report on stdout. Exit codes: 0 all checks pass, 1 a check
// failed, 2 bad input.

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "weylcrit/critical.hpp"
#include "weylcrit/intertwine.hpp"
#include "weylcrit/numerology.hpp"
#include "weylcrit/pivalue.hpp"
#include "weylcrit/satake.hpp"
#include "weylcrit/weights_io.hpp"
#include "weylcrit/weyl.hpp"

using json = nlohmann::ordered_json;
using namespace weylcrit;

namespace {

struct Report {
    json doc;
    bool failed = false;

    Report(const std::string& command) {
        doc["command"] = command;
        doc["inputs"] = json::object();
        doc["outputs"] = json::object();
        doc["checks"] = json::array();
    }
    void input(const std::string& k, json v) { doc["inputs"][k] = std::move(v); }
    void output(const std::string& k, json v) { doc["outputs"][k] = std::move(v); }
    void check(const std::string& name, bool pass, const std::string& detail = "") {
        doc["checks"].push_back(json{{"name", name}, {"pass", pass}, {"detail", detail}});
        if (!pass) failed = true;
    }
    int emit() {
        doc["result"] = failed ? "fail" : "pass";
        std::cout << doc.dump(2) << "\n";
        return failed ? 1 : 0;
    }
};

json perm_json(const SignedPerm& w) {
    json a = json::array();
    for (int v : w.signed_images()) a.push_back(v);
    return a;
}

json weight_json(const WeightVec& v) {
    json a = json::array();
    for (int x : v) a.push_back(x);
    return a;
}

json multiweight_json(const MultiWeight& mw) {
    json a = json::array();
    for (const auto& f : mw.factors) a.push_back(weight_json(f));
    return a;
}

CharData char_data_for(const CoeffWeight& cw, int d, const std::string& eps_text) {
    std::vector<int> eps(cw.r_F(), 0);
    if (!eps_text.empty()) {
        eps = parse_int_list(eps_text);
        if (static_cast<int>(eps.size()) != cw.r_F())
            throw WeightParseError("eps: expected one parity per embedding");
    }
    return CharData::make(d, eps);
}

void validate_n(int n, const CoeffWeight& cw) {
    if (n != 0 && n != cw.n())
        throw WeightParseError("--n disagrees with the number of weight entries");
}

int cmd_critical_set(const std::string& mu_text, int d, int n, const std::string& eps_text) {
    Report rep("critical-set");
    CoeffWeight cw = CoeffWeight::make(parse_dominant_multiweight(mu_text));
    validate_n(n, cw);
    CharData ch = char_data_for(cw, d, eps_text);
    rep.input("n", cw.n());
    rep.input("rf", cw.r_F());
    rep.input("mu", mu_text);
    rep.input("d", d);
    rep.input("eps", json(ch.eps));

    if (cw.mu_min == 0) {
        rep.output("mu_min", 0);
        rep.check("mu_min_positive", false, "mu_min = 0: no critical points guaranteed");
        return rep.emit();
    }
    CriticalSet cs = critical_set(cw, ch);
    rep.output("mu_min", cw.mu_min);
    rep.output("members", json(cs.members));
    rep.check("closed_form_matches_scan", true, "verified inside critical_set");
    rep.check("cardinality_is_2_mu_min",
              static_cast<int>(cs.members.size()) == 2 * cw.mu_min,
              std::to_string(cs.members.size()));
    CharData flipped = ch;
    for (int& e : flipped.eps) e = 1 - e;
    CriticalSet cs2 = critical_set(cw, flipped);
    rep.check("independent_of_eps", cs2.members == cs.members);
    return rep.emit();
}

int cmd_lemma_check(const std::string& mu_text, int d, int n) {
    Report rep("lemma-check");
    CoeffWeight cw = CoeffWeight::make(parse_dominant_multiweight(mu_text));
    validate_n(n, cw);
    CharData ch = char_data_for(cw, d, "");
    rep.input("n", cw.n());
    rep.input("rf", cw.r_F());
    rep.input("mu", mu_text);
    rep.input("d", d);

    if (cw.mu_min == 0) {
        rep.check("mu_min_positive", false, "mu_min = 0");
        return rep.emit();
    }
    CombLemmaResult lem = comb_lemma(cw, ch);
    rep.output("cond_ii", lem.cond_ii);
    bool crit = is_critical(-cw.n(), cw, ch) && is_critical(1 - cw.n(), cw, ch);
    rep.output("minus_n_and_1_minus_n_critical", crit);
    if (lem.witness) {
        json w = json::array();
        for (int s : *lem.witness) w.push_back(s > 0 ? "w+" : "w-");
        rep.output("witness", w);
        rep.output("lambda", multiweight_json(*lem.lambda));
    } else {
        rep.output("witness", nullptr);
        rep.output("lambda", nullptr);
    }
    rep.check("i_equiv_ii", crit == lem.cond_ii);
    rep.check("ii_equiv_iii", lem.cond_ii == lem.witness.has_value(),
              "verified inside comb_lemma");
    if (lem.witness) {
        PropIdentityReport pid = prop_identities(cw, ch);
        rep.output("lambda_vee", multiweight_json(pid.lambda_vee));
        rep.check("identity_w_prime", pid.id_prime);
        rep.check("identity_w_vee", pid.id_vee);
        rep.check("identity_w_vee_prime", pid.id_vee_prime);
    }
    return rep.emit();
}

int cmd_kostant(int n) {
    Report rep("kostant");
    rep.input("n", n);
    auto reps = kostant_reps(n);
    json elems = json::array();
    std::vector<int> lengths;
    for (const auto& w : reps) {
        int l = length(w);
        lengths.push_back(l);
        elems.push_back(json{{"images", perm_json(w)},
                             {"length", l},
                             {"balanced", is_balanced(w, n)}});
    }
    rep.output("count", reps.size());
    rep.output("lengths", json(lengths));
    rep.output("elements", elems);
    json word = json(factor_w_P(n));
    rep.output("w_P_word", word);
    rep.check("count_is_2_n_plus_1", static_cast<int>(reps.size()) == 2 * (n + 1));
    std::vector<int> expected;
    for (int l = 0; l <= 2 * n; ++l) {
        expected.push_back(l);
        if (l == n) expected.push_back(l);
    }
    rep.check("length_multiset", lengths == expected);
    SignedPerm prod = product_of_word(n + 1, factor_w_P(n));
    rep.check("w_P_word_multiplies_to_w_P", prod == special_elements(n).w_P);
    bool reduced = true;
    std::vector<int> prefix;
    for (int k : factor_w_P(n)) {
        prefix.push_back(k);
        if (length(product_of_word(n + 1, prefix)) != static_cast<int>(prefix.size()))
            reduced = false;
    }
    rep.check("w_P_word_reduced", reduced);
    return rep.emit();
}

int cmd_balanced(int n) {
    Report rep("balanced");
    rep.input("n", n);
    auto reps = kostant_reps(n);
    json elems = json::array();
    int count = 0;
    for (const auto& w : reps)
        if (is_balanced(w, n)) {
            elems.push_back(perm_json(w));
            ++count;
        }
    rep.output("elements", elems);
    auto se = special_elements(n);
    rep.check("exactly_two", count == 2, std::to_string(count));
    bool match = count == 2 && elems[0] == perm_json(se.w_plus) && elems[1] == perm_json(se.w_minus);
    if (count == 2 && !match)
        match = elems[1] == perm_json(se.w_plus) && elems[0] == perm_json(se.w_minus);
    rep.check("matches_closed_forms", match);
    return rep.emit();
}

int cmd_arch_ratio(const std::string& mu_text, int d, int n, const std::string& eps_text) {
    Report rep("arch-ratio");
    CoeffWeight cw = CoeffWeight::make(parse_dominant_multiweight(mu_text));
    validate_n(n, cw);
    CharData ch = char_data_for(cw, d, eps_text);
    rep.input("n", cw.n());
    rep.input("rf", cw.r_F());
    rep.input("mu", mu_text);
    rep.input("d", d);

    bool crit = is_critical(-cw.n(), cw, ch) && is_critical(1 - cw.n(), cw, ch);
    rep.check("evaluation_points_critical", crit);
    if (!crit) return rep.emit();
    PiValue r = ratio_L_inf(cw, ch);
    rep.output("ratio", r.str());
    rep.check("pi_power_is_n_rf", r.half_pi_exp == 2L * cw.n() * cw.r_F(),
              "half exponent " + std::to_string(r.half_pi_exp));
    rep.check("coefficient_nonzero", !r.coeff.is_zero(), r.coeff.str());
    return rep.emit();
}

int cmd_intertwine(const std::string& mu_text, int d, int eps0, int n) {
    Report rep("intertwine");
    MultiWeight mw = parse_dominant_multiweight(mu_text);
    if (mw.r_F() != 1) throw WeightParseError("intertwine expects a single embedding");
    CoeffWeight cw = CoeffWeight::make(mw);
    validate_n(n, cw);
    const WeightVec& mu_v = mw.factors[0];
    rep.input("n", cw.n());
    rep.input("mu", mu_text);
    rep.input("d", d);
    rep.input("eps0", eps0);

    int t = -(d + cw.n());
    bool admissible = cw.mu_min >= 1 && (1 - cw.mu_min <= t) && (t <= cw.mu_min - 1) && t >= 0;
    rep.check("point_admissible", admissible,
              "-(d+n) = " + std::to_string(t) + ", |mu_n| = " + std::to_string(cw.mu_min));
    if (!admissible) return rep.emit();

    auto steps = rank_one_steps(mu_v, eps0, d, cw.n());
    json step_json = json::array();
    for (const auto& st : steps)
        step_json.push_back(json{{"j", st.j},
                                 {"beta", st.beta.str()},
                                 {"exponent", st.exponent},
                                 {"parity", st.parity}});
    rep.output("steps", step_json);
    rep.output("ds_param", json(ds_param(mu_v, cw.n()).ells));
    rep.output("blattner", weight_json(blattner(mu_v, cw.n())));

    PhiCResult pc = phi_and_c(mu_v, d, eps0, cw.n());
    rep.output("phi_net_order", pc.phi.net_order);
    rep.output("c", pc.c.str());
    rep.output("phase_sign", pc.phase_sign);
    rep.output("parity_counts", json::array({pc.evens_low, pc.evens_high}));
    const int r = cw.n() / 2;
    rep.check("phi_holomorphic", pc.phi.net_order == 0);
    rep.check("pole_counts_r_r", pc.num_poles == r && pc.den_poles == r);
    rep.check("parity_counts_r_r", pc.evens_low == r && pc.evens_high == r);
    rep.check("c_is_rational_times_pi_n", pc.c.half_pi_exp == 2L * cw.n() && !pc.c.is_zero());

    CharData ch = CharData::make(d, {0});
    PiValue lr = ratio_L_inf(cw, ch);
    PiValue quot = pc.c / lr;
    rep.output("c_over_L_ratio", quot.str());
    rep.check("c_over_L_ratio_rational", quot.half_pi_exp == 0 && !quot.is_zero());
    return rep.emit();
}

int cmd_satake(const std::string& thetas_text, const std::string& theta_chi_text, long q, int s) {
    Report rep("satake");
    SatakeParam p = SatakeParam::make(parse_rational_list(thetas_text),
                                      Rational::parse(theta_chi_text), q);
    rep.input("thetas", thetas_text);
    rep.input("theta_chi", theta_chi_text);
    rep.input("q", q);
    rep.input("s", s);

    auto ls = local_L(s, p);
    auto ls1 = local_L(s + 1, p);
    auto gk = gk_ratio(s, p);
    rep.output("local_L_s", ls ? json(ls->str()) : json(nullptr));
    rep.output("local_L_s_plus_1", ls1 ? json(ls1->str()) : json(nullptr));
    rep.output("gk_ratio", gk ? json(gk->str()) : json(nullptr));
    if (ls && ls1) {
        rep.check("quotient_consistency", gk.has_value() && *gk * *ls1 == *ls);
        SatakeParam inv = p;
        for (auto& t : inv.thetas) t = Rational(1) / t;
        SatakeParam permd = p;
        std::reverse(permd.thetas.begin(), permd.thetas.end());
        rep.check("inversion_invariance", local_L(s, inv) == ls);
        rep.check("permutation_invariance", local_L(s, permd) == ls);
    } else {
        rep.check("pole_signalled", !gk.has_value(), "local factor has a pole");
    }
    return rep.emit();
}

int cmd_dims(int n, int rf) {
    Report rep("dims");
    rep.input("n", n);
    rep.input("rf", rf);
    DimReport d = dims(n, rf);
    rep.output("dim_SG", d.dim_SG);
    rep.output("dim_boundary", d.dim_boundary);
    rep.output("dim_SM", d.dim_SM);
    rep.output("dim_ScircM", d.dim_ScircM);
    rep.output("dim_UP", d.dim_UP);
    rep.output("q0", d.q0);
    rep.output("q_m", d.q_m);
    rep.output("q_b", d.q_b);
    rep.output("q_t", d.q_t);
    rep.output("frak_q_b", d.frak_q_b);
    rep.output("frak_q_t", d.frak_q_t);
    rep.check("q_b_plus_q_t_is_dim_SM", d.q_b + d.q_t == d.dim_SM);
    rep.check("frak_sum_is_dim_boundary", d.frak_q_b + d.frak_q_t == d.dim_boundary);
    rep.check("frak_q_b_shift", d.frak_q_b == d.q_b + d.dim_UP / 2);
    return rep.emit();
}

int cmd_euler_check(const std::string& lambda_text, int n) {
    Report rep("euler-check");
    MultiWeight mw = parse_dominant_multiweight(lambda_text);
    if (mw.r_F() != 1) throw WeightParseError("euler-check expects a single embedding");
    const WeightVec& lam = mw.factors[0];
    if (n == 0) n = static_cast<int>(lam.size()) - 1;
    if (static_cast<int>(lam.size()) != n + 1)
        throw WeightParseError("--lambda must have n+1 entries");
    rep.input("n", n);
    rep.input("lambda", lambda_text);
    mpz_class sum = kostant_euler_check(lam, n);
    rep.output("alternating_sum", sum.get_str());
    rep.check("vanishes", sum == 0);
    return rep.emit();
}

struct SweepTally {
    long points = 0;
    long admissible = 0;
    json failures = json::object();
    bool any_failed = false;

    void note(const std::string& name, bool ok) {
        if (!ok) {
            any_failed = true;
            failures[name] = failures.value(name, 0) + 1;
        }
    }
};

void sweep_point(const CoeffWeight& cw, const CharData& ch, SweepTally& tally) {
    ++tally.points;
    const int n = cw.n();
    CombLemmaResult lem = comb_lemma(cw, ch);  // asserts (ii) <=> (iii) internally
    bool crit = is_critical(-n, cw, ch) && is_critical(1 - n, cw, ch);
    tally.note("i_equiv_ii", crit == lem.cond_ii);

    CriticalSet cs = critical_set(cw, ch);  // asserts closed form == scan internally
    tally.note("cardinality_2_mu_min", static_cast<int>(cs.members.size()) == 2 * cw.mu_min);
    tally.note("kappa_flip_same_set",
               critical_set(CoeffWeight::make(kappa_flip(cw.mu)), ch).members == cs.members);

    if (!lem.cond_ii) return;
    ++tally.admissible;
    PropIdentityReport pid = prop_identities(cw, ch);
    tally.note("prop_identities", pid.all());

    PiValue ratio = ratio_L_inf(cw, ch);
    tally.note("ratio_exponent", ratio.half_pi_exp == 2L * n * cw.r_F() && !ratio.coeff.is_zero());

    if (-(ch.d + n) >= 0) {
        for (int tau = 0; tau < cw.r_F(); ++tau) {
            for (int eps0 : {0, 1}) {
                PhiCResult pc = phi_and_c(cw.mu.factors[tau], ch.d, eps0, n);
                tally.note("phi_holomorphic", pc.phi.net_order == 0);
                tally.note("phi_parity_counts",
                           pc.evens_low == n / 2 && pc.evens_high == n / 2);
                CoeffWeight single = CoeffWeight::make(MultiWeight{{cw.mu.factors[tau]}});
                PiValue lr = ratio_L_inf(single, CharData::make(ch.d, {0}));
                PiValue quot = pc.c / lr;
                tally.note("c_over_L_ratio_rational", quot.half_pi_exp == 0 && !quot.is_zero());
            }
        }
    }
}

std::vector<WeightVec> dominant_mu_list(int n, int bound) {
    // all chains mu_1 >= ... >= mu_{n-1} >= |mu_n| >= 1 with entries in [-bound, bound]
    std::vector<WeightVec> out;
    WeightVec cur(n);
    auto rec = [&](auto&& self, int j, int hi) -> void {
        if (j == n - 1) {
            for (int v = 1; v <= hi; ++v) {
                cur[j] = v;
                out.push_back(cur);
                cur[j] = -v;
                out.push_back(cur);
            }
            return;
        }
        for (int v = 1; v <= hi; ++v) {
            cur[j] = v;
            self(self, j + 1, v);
        }
    };
    rec(rec, 0, bound);
    return out;
}

int cmd_sweep(int n, int rf_max, int mu_bound, int d_min, int d_max) {
    Report rep("sweep");
    rep.input("n", n);
    rep.input("rf_max", rf_max);
    rep.input("mu_bound", mu_bound);
    rep.input("d_min", d_min);
    rep.input("d_max", d_max);

    SweepTally tally;
    auto mus = dominant_mu_list(n, mu_bound);
    for (int rf = 1; rf <= rf_max; ++rf) {
        std::vector<int> idx(rf, 0);
        while (true) {
            MultiWeight mw;
            for (int t = 0; t < rf; ++t) mw.factors.push_back(mus[idx[t]]);
            CoeffWeight cw = CoeffWeight::make(mw);
            for (int d = d_min; d <= d_max; ++d)
                sweep_point(cw, CharData::make(d, std::vector<int>(rf, 0)), tally);
            int t = rf - 1;
            while (t >= 0 && ++idx[t] == static_cast<int>(mus.size())) idx[t--] = 0;
            if (t < 0) break;
        }
    }
    rep.output("points", tally.points);
    rep.output("admissible_points", tally.admissible);
    rep.output("failures", tally.failures);
    rep.check("all_grid_points_pass", !tally.any_failed);
    return rep.emit();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact type-D Weyl / critical-value / intertwining toolkit"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("--verbose", verbose, "timing information on stderr");

    std::string mu_text, lambda_text, eps_text, thetas_text, theta_chi_text = "1";
    int n = 0, d = 0, eps0 = 0, rf = 1, s = 1;
    long q = 2;
    int sweep_n = 2, rf_max = 2, mu_bound = 4, d_min = -10, d_max = 4;

    auto* c_crit = app.add_subcommand("critical-set", "critical integers of the completed L-function");
    c_crit->add_option("--mu", mu_text, "coefficient weight, e.g. \"3,2;4,1\"")->required();
    c_crit->add_option("--d", d, "integer twist")->required();
    c_crit->add_option("--n", n, "rank check (optional)");
    c_crit->add_option("--eps", eps_text, "sign parities per embedding");

    auto* c_lem = app.add_subcommand("lemma-check", "combinatorial lemma (i)<=>(ii)<=>(iii)");
    c_lem->add_option("--mu", mu_text)->required();
    c_lem->add_option("--d", d)->required();
    c_lem->add_option("--n", n);

    auto* c_kos = app.add_subcommand("kostant", "Kostant representatives and the w_P word");
    c_kos->add_option("--n", n)->required();

    auto* c_bal = app.add_subcommand("balanced", "balanced Kostant representatives");
    c_bal->add_option("--n", n)->required();

    auto* c_ratio = app.add_subcommand("arch-ratio", "exact ratio L_inf(-n)/L_inf(1-n)");
    c_ratio->add_option("--mu", mu_text)->required();
    c_ratio->add_option("--d", d)->required();
    c_ratio->add_option("--n", n);
    c_ratio->add_option("--eps", eps_text);

    auto* c_int = app.add_subcommand("intertwine", "rank-one intertwining scalar at s = -n");
    c_int->add_option("--mu", mu_text, "single-embedding weight")->required();
    c_int->add_option("--d", d)->required();
    c_int->add_option("--eps0", eps0, "character parity");
    c_int->add_option("--n", n);

    auto* c_sat = app.add_subcommand("satake", "unramified local L-factor and GK ratio");
    c_sat->add_option("--thetas", thetas_text, "comma-separated rationals")->required();
    c_sat->add_option("--theta-chi", theta_chi_text);
    c_sat->add_option("--q", q, "residue cardinality");
    c_sat->add_option("--s", s, "integer argument");

    auto* c_dims = app.add_subcommand("dims", "dimension numerology");
    c_dims->add_option("--n", n)->required();
    c_dims->add_option("--rf", rf)->required();

    auto* c_eul = app.add_subcommand("euler-check", "alternating Kostant dimension sum");
    c_eul->add_option("--lambda", lambda_text, "G-dominant weight, n+1 entries")->required();
    c_eul->add_option("--n", n);

    auto* c_sweep = app.add_subcommand("sweep", "grid sweep of the lemma/critical/ratio checks");
    c_sweep->add_option("--n", sweep_n);
    c_sweep->add_option("--rf-max", rf_max);
    c_sweep->add_option("--mu-bound", mu_bound);
    c_sweep->add_option("--d-min", d_min);
    c_sweep->add_option("--d-max", d_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    int status = 2;
    try {
        if (c_crit->parsed()) status = cmd_critical_set(mu_text, d, n, eps_text);
        else if (c_lem->parsed()) status = cmd_lemma_check(mu_text, d, n);
        else if (c_kos->parsed()) status = cmd_kostant(n);
        else if (c_bal->parsed()) status = cmd_balanced(n);
        else if (c_ratio->parsed()) status = cmd_arch_ratio(mu_text, d, n, eps_text);
        else if (c_int->parsed()) status = cmd_intertwine(mu_text, d, eps0, n);
        else if (c_sat->parsed()) status = cmd_satake(thetas_text, theta_chi_text, q, s);
        else if (c_dims->parsed()) status = cmd_dims(n, rf);
        else if (c_eul->parsed()) status = cmd_euler_check(lambda_text, n);
        else if (c_sweep->parsed()) status = cmd_sweep(sweep_n, rf_max, mu_bound, d_min, d_max);
    } catch (const WeightParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (verbose) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        std::cerr << "elapsed: " << ms << " ms\n";
    }
    return status;
}
