// Command-line front end: evaluation, verification campaigns, plot data.
//
// Exit codes: 0 = certified pass, 1 = certified failure, 2 = undecided.
// SUDLER_PRECISION (bits) overrides the default working precision.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sudler/continued_fraction.hpp"
#include "sudler/criterion.hpp"
#include "sudler/enclosure.hpp"
#include "sudler/limit_fn.hpp"
#include "sudler/period_verify.hpp"
#include "sudler/sudler_eval.hpp"
#include "sudler/surd.hpp"

using json = nlohmann::json;
using namespace sudler;

namespace {

json enc_json(const Enclosure& e) {
    return json{{"lo", e.lo_d()}, {"hi", e.hi_d()}, {"str", e.str()}};
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << text << "\n";
    }
}

void emit_json(const std::string& out_path, json j) {
    j["schema"] = "sudler-report/1";
    j["precision_bits"] = static_cast<long>(Enclosure::default_precision());
    emit(out_path, j.dump(2));
}

mpq_class parse_rational(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::runtime_error("bad rational: " + s);
    v.canonicalize();
    return v;
}

int cmd_eval(const std::string& alpha, const std::string& N_str, long perturb_n,
             const std::string& eps_str, const std::string& out) {
    ContinuedFraction cf = ContinuedFraction::parse(alpha);
    json j{{"command", "eval"}, {"alpha", cf.str()}};
    Enclosure v;
    if (perturb_n >= 0) {
        Enclosure eps(parse_rational(eps_str));
        v = sudler_perturbed(cf, static_cast<size_t>(perturb_n), eps);
        j["n"] = perturb_n;
        j["eps"] = eps_str;
    } else {
        mpz_class N(N_str);
        if (cf.is_finite())
            v = ::sudler::sudler(rational_from_cf(cf), N);
        else
            v = ::sudler::sudler(value_of(cf), N);
        j["N"] = N.get_str();
    }
    j["value"] = enc_json(v);
    emit_json(out, j);
    return 0;
}

int cmd_decompose(const std::string& alpha, const std::string& N_str, const std::string& out) {
    ContinuedFraction cf = ContinuedFraction::parse(alpha);
    mpz_class N(N_str);
    Decomposition d = decompose(cf, N);
    json j{{"command", "decompose"}, {"alpha", cf.str()}, {"N", N.get_str()}};
    j["digits"] = d.digits;
    json terms = json::array();
    for (const auto& t : d.terms)
        terms.push_back(json{{"i", t.i},
                             {"c", t.c},
                             {"epsilon", enc_json(t.epsilon)},
                             {"factor", enc_json(t.factor)}});
    j["terms"] = terms;
    json kf = json::array();
    for (const auto& k : d.kfactors) kf.push_back(json{{"i", k.i}, {"K", enc_json(k.value)}});
    j["kfactors"] = kf;
    j["top"] = enc_json(d.top);
    j["product"] = enc_json(d.product);
    j["direct"] = enc_json(cf.is_finite() ? ::sudler::sudler(rational_from_cf(cf), N)
                                          : ::sudler::sudler(value_of(cf), N));
    emit_json(out, j);
    return 0;
}

int cmd_limit(const std::string& alpha, long r, const std::string& eps_str, long T,
              const std::string& out) {
    ContinuedFraction cf = ContinuedFraction::parse(alpha);
    GEvaluator ev(cf, r);
    Enclosure eps(parse_rational(eps_str));
    json j{{"command", "limit"}, {"alpha", cf.str()}, {"r", r}, {"eps", eps_str}, {"T", T}};
    j["C_r"] = ev.C().str();
    j["sigma_r"] = ev.sigma().str();
    int rc = 0;
    try {
        Enclosure g = ev.G_enclosure(eps, T);
        j["G"] = enc_json(g);
        j["truncated"] = enc_json(ev.G_truncated(eps, T));
    } catch (const std::runtime_error& e) {
        j["error"] = e.what();
        rc = 2;
    }
    emit_json(out, j);
    return rc;
}

int cmd_figure1(long T, long R, const std::string& out) {
    std::ostringstream os;
    os << "x,F\n";
    for (const auto& p : figure1(T, R))
        os << p.x.get_str() << "," << mpq_class(p.F).get_d() << "\n";
    std::string s = os.str();
    s.pop_back();
    emit(out, s);
    return 0;
}

int cmd_figure6a(long T, long steps, const std::string& eps_max_str, const std::string& out) {
    mpq_class eps_max = parse_rational(eps_max_str);
    std::ostringstream os;
    os << "a,eps,lo,hi\n";
    for (long a = 2; a <= 5; ++a) {
        GEvaluator ev(ContinuedFraction::periodic({6, a}), 0);
        for (long k = -steps; k <= steps; ++k) {
            mpq_class eps = eps_max * k / steps;
            eps.canonicalize();
            try {
                Enclosure g = ev.G_enclosure(Enclosure(eps), T);
                os << a << "," << eps.get_d() << "," << g.lo_d() << "," << g.hi_d() << "\n";
            } catch (const std::runtime_error&) {
                // outside the certified zero-free/T range: omit the point
            }
        }
    }
    std::string s = os.str();
    s.pop_back();
    emit(out, s);
    return 0;
}

json grid_json(const GridReport& g) {
    return json{{"name", g.name},
                {"T", g.T},
                {"R", g.R},
                {"i_lo", g.i_lo},
                {"i_hi", g.i_hi},
                {"cells_total", g.cells_total},
                {"cells_excluded", g.cells_excluded},
                {"cells_verified", g.cells_verified},
                {"cells_undecided", g.cells_undecided},
                {"min_margin", g.min_margin},
                {"bad_cells", g.bad_cells},
                {"seconds", g.seconds},
                {"pass", g.pass()}};
}

int cmd_verify_theorem1(const std::string& which, long scale, const std::string& out) {
    Theorem1Report rep = verify_theorem1(scale, which);
    json j{{"command", "verify-theorem1"},
           {"case", which.empty() ? "all" : which},
           {"scale", rep.scale},
           {"certifying", rep.certifying},
           {"analytic_pass", rep.analytic_pass},
           {"seconds", rep.seconds},
           {"pass", rep.pass()}};
    json grids = json::array();
    for (const auto& g : rep.grids) grids.push_back(grid_json(g));
    j["grids"] = grids;
    emit_json(out, j);
    std::cerr << "theorem1 case=" << (which.empty() ? "all" : which) << " scale=" << scale
              << (rep.certifying ? "" : " (non-certifying smoke run)")
              << (rep.pass() ? ": pass" : ": FAIL") << "\n";
    if (rep.pass()) return 0;
    for (const auto& g : rep.grids)
        if (g.cells_undecided > 0) return 2;
    return 1;
}

json pair_json(const Theorem2Pair& p) {
    return json{{"i2", p.i2}, {"value", enc_json(p.value)}, {"below", p.below}};
}

int cmd_verify_theorem2(long n, const std::string& out) {
    Theorem2Report rep = theorem2_demo(n);
    json j{{"command", "verify-theorem2"},
           {"alpha", "[0;(6,5)]"},
           {"n", n},
           {"eps_prime_00", enc_json(rep.eps00)},
           {"eps_prime_10", enc_json(rep.eps10)},
           {"limiting_pair", enc_json(rep.limiting_pair)},
           {"limiting_below_0.997", rep.limiting_below_0997},
           {"surrogate_n_lo", rep.surrogate_n_lo},
           {"log_surrogate", rep.log_surrogate},
           {"surrogate_decreasing", rep.surrogate_decreasing},
           {"byproduct_[0;(4,1)]_fires", rep.byproduct_41_fires},
           {"seconds", rep.seconds},
           {"pass", rep.pass()}};
    json gp = json::array(), pp = json::array();
    for (const auto& p : rep.g_pairs) gp.push_back(pair_json(p));
    for (const auto& p : rep.p_pairs) pp.push_back(pair_json(p));
    j["g_pairs"] = gp;
    j["p_pairs"] = pp;
    emit_json(out, j);
    if (rep.pass()) return 0;
    if (rep.limiting_pair.contains(mpq_class(997, 1000))) return 2;
    for (const auto& p : rep.g_pairs)
        if (!p.below && p.value.contains(mpq_class(999, 1000))) return 2;
    return 1;
}

int cmd_verify_theorem3(const std::string& alpha, long T_start, long T_max,
                        const std::string& out) {
    ContinuedFraction cf = ContinuedFraction::parse(alpha);
    LemmaReport rep;
    if (cf.str() == "[0;(5,4)]")
        rep = verify_lemma_54(T_start, T_max);
    else if (cf.str() == "[0;(6,5,5)]")
        rep = verify_lemma_655(T_start, T_max);
    else
        throw std::runtime_error("verify-theorem3 supports [0;(5,4)] and [0;(6,5,5)] only");
    json j{{"command", "verify-theorem3"},
           {"alpha", rep.alpha},
           {"T_final", rep.T_final},
           {"seconds", rep.seconds},
           {"pass", rep.pass()}};
    json props = json::array();
    bool any_undecided = false, any_violation = false;
    for (const auto& p : rep.properties) {
        props.push_back(json{{"name", p.name},
                             {"threshold", p.threshold},
                             {"checked", p.checked},
                             {"undecided", p.undecided},
                             {"violations", p.violations},
                             {"exact_ones", p.exact_ones},
                             {"min_lower", p.min_lower},
                             {"margin", p.min_lower - p.threshold},
                             {"witnesses", p.witnesses},
                             {"pass", p.pass()}});
        any_undecided = any_undecided || p.undecided > 0;
        any_violation = any_violation || p.violations > 0;
    }
    j["properties"] = props;
    emit_json(out, j);
    if (rep.pass()) return 0;
    return any_violation ? 1 : 2;
}

int cmd_remark(long T_max, const std::string& out) {
    RemarkReport rep = remark_conjectures(T_max);
    json j{{"command", "remark-conjectures"},
           {"family1_flip_at_4", rep.family1_flip_at_4},
           {"family2_flip_at_5", rep.family2_flip_at_5},
           {"undecided", rep.undecided}};
    json cases = json::array();
    for (const auto& c : rep.cases)
        cases.push_back(json{{"a1", c.a1},
                             {"a2", c.a2},
                             {"G_1", enc_json(c.value)},
                             {"verdict", c.verdict}});
    j["cases"] = cases;
    bool pass = rep.family1_flip_at_4 && rep.family2_flip_at_5 && !rep.undecided;
    j["pass"] = pass;
    emit_json(out, j);
    if (pass) return 0;
    return rep.undecided ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified verification toolkit for Sudler products at badly "
                 "approximable numbers"};
    app.require_subcommand(1);

    std::string alpha = "[0;(6,5)]", N_str = "1", eps_str = "0", out, which, eps_max = "1/20";
    long r = 0, T = 100000, R = 100, scale = 1, n = 40, perturb_n = -1, steps = 20;
    long T_start = 1000, T_max = 1000000, threads = 1;

    auto* eval = app.add_subcommand("eval", "Evaluate P_N(alpha) or P_{q_n}(alpha, eps)");
    eval->add_option("--alpha", alpha, "CF literal or rational")->required();
    eval->add_option("--N", N_str, "product length N");
    eval->add_option("--n", perturb_n, "perturbed mode: index n of q_n");
    eval->add_option("--eps", eps_str, "perturbation (rational)");
    eval->add_option("--out", out, "output file (default stdout)");

    auto* dec = app.add_subcommand("decompose", "Ostrowski decomposition of P_N (Prop. 2.1)");
    dec->add_option("--alpha", alpha)->required();
    dec->add_option("--N", N_str)->required();
    dec->add_option("--out", out);

    auto* lim = app.add_subcommand("limit", "Certified enclosure of G_r(alpha, eps)");
    lim->add_option("--alpha", alpha)->required();
    lim->add_option("--r", r, "residue class");
    lim->add_option("--eps", eps_str, "perturbation (rational)");
    lim->add_option("--T", T, "truncation length");
    lim->add_option("--out", out);

    auto* f1 = app.add_subcommand("figure1", "Exact F(T, i/R, (i+1)/R) profile (CSV)");
    f1->add_option("--T", T)->required();
    f1->add_option("--R", R)->required();
    f1->add_option("--out", out);

    auto* f6 = app.add_subcommand("figure6a", "G_0([0;(6,a)], eps) curves, a = 2..5 (CSV)");
    long T6 = 20000;
    f6->add_option("--T", T6, "truncation length");
    f6->add_option("--steps", steps, "grid half-count");
    f6->add_option("--eps-max", eps_max, "half-width of the eps range (rational)");
    f6->add_option("--out", out);

    auto* v1 = app.add_subcommand("verify-theorem1", "Theorem 1 grid campaigns");
    v1->add_option("--case", which, "one of: 7, 8, 9-18, >=18 (default all)");
    v1->add_option("--scale", scale, "divide T and R for smoke runs (non-certifying)");
    v1->add_option("--threads", threads, "worker cap (this build is single-threaded)");
    v1->add_option("--out", out);

    auto* v2 = app.add_subcommand("verify-theorem2", "Theorem 2 demonstrator for [0;(6,5)]");
    v2->add_option("--n", n, "top index (N_n over 2n+1 digits)");
    v2->add_option("--out", out);

    auto* v3 = app.add_subcommand("verify-theorem3", "Theorem 3 case analyses");
    v3->add_option("--alpha", alpha, "[0;(5,4)] or [0;(6,5,5)]")->required();
    v3->add_option("--T-start", T_start);
    v3->add_option("--T-max", T_max);
    v3->add_option("--out", out);

    auto* rm = app.add_subcommand("remark-conjectures", "Remark 4.3 sign flips");
    rm->add_option("--T-max", T_max);
    rm->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) return cmd_eval(alpha, N_str, perturb_n, eps_str, out);
        if (*dec) return cmd_decompose(alpha, N_str, out);
        if (*lim) return cmd_limit(alpha, r, eps_str, T, out);
        if (*f1) return cmd_figure1(T, R, out);
        if (*f6) return cmd_figure6a(T6, steps, eps_max, out);
        if (*v1) return cmd_verify_theorem1(which, scale, out);
        if (*v2) return cmd_verify_theorem2(n, out);
        if (*v3) return cmd_verify_theorem3(alpha, T_start, T_max, out);
        if (*rm) return cmd_remark(T_max, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
