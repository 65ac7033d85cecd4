#include <doctest.h>

#include <cmath>

#include "sudler/continued_fraction.hpp"
#include "sudler/limit_fn.hpp"
#include "sudler/period_verify.hpp"
#include "sudler/sudler_eval.hpp"

using namespace sudler;

TEST_CASE("G_0 and G_1 of [0;(6,5)] at eps = 0 match pinned values") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5});
    GEvaluator g0(cf, 0), g1(cf, 1);
    Enclosure v0 = g0.G_adaptive(Enclosure(), 1e-3, 1000, 200000);
    Enclosure v1 = g1.G_adaptive(Enclosure(), 1e-3, 1000, 200000);
    CHECK(v0.contains(1.042093));
    CHECK(v1.contains(1.309755));
    CHECK(v0.certainly_greater(mpq_class(1)));
    CHECK(v1.certainly_greater(mpq_class(1)));
}

TEST_CASE("G_0 of [0;(6,2)] is certified below 1 (Figure 6a)") {
    GEvaluator g0(ContinuedFraction::periodic({6, 2}), 0);
    Enclosure v = g0.G_adaptive(Enclosure(), 1e-3, 1000, 200000);
    CHECK(v.contains(0.846872));
    CHECK(v.certainly_less(mpq_class(1)));
}

TEST_CASE("G at the limiting eps' values matches pinned evaluations") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5});
    Enclosure e00 = eps_prime_periodic_exact(cf, 0, 0, {1, 1}).enclose();
    Enclosure e10 = eps_prime_periodic_exact(cf, 1, 0, {1, 1}).enclose();
    GEvaluator g0(cf, 0), g1(cf, 1);
    CHECK(g0.G_adaptive(e00, 1e-3, 1000, 200000).contains(0.871940));
    CHECK(g1.G_adaptive(e10, 1e-3, 1000, 200000).contains(1.140865));
}

TEST_CASE("perturbed Sudler products enter the G enclosure as n grows") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5});
    GEvaluator g0(cf, 0);
    Enclosure limit = g0.G_adaptive(Enclosure(), 1e-4, 1000, 400000);
    // P_{q_n}(alpha, 0) for even n approaches G_0(0); rate ~ C/q_n^2
    Enclosure p4 = sudler_perturbed(cf, 4, Enclosure());   // q_4 = 991
    Enclosure p6 = sudler_perturbed(cf, 6, Enclosure());   // q_6 = 31681
    double lim = limit.mid_d();
    CHECK(std::fabs(p4.mid_d() - lim) < 5e-3);
    CHECK(std::fabs(p6.mid_d() - lim) < 5e-5);
    CHECK(std::fabs(p6.mid_d() - lim) < std::fabs(p4.mid_d() - lim));
}

TEST_CASE("enclosures at larger T stay inside earlier ones (nesting up to slack)") {
    GEvaluator g0(ContinuedFraction::periodic({6, 5}), 0);
    Enclosure coarse = g0.G_enclosure(Enclosure(), 2000);
    Enclosure fine = g0.G_enclosure(Enclosure(), 32000);
    CHECK(coarse.lo_d() <= fine.lo_d() + 1e-12);
    CHECK(fine.hi_d() <= coarse.hi_d() + 1e-12);
    CHECK(fine.width() < coarse.width());
}

TEST_CASE("hypothesis guard: tiny T is refused, not silently certified") {
    GEvaluator g0(ContinuedFraction::periodic({6, 5}), 0);
    CHECK_THROWS_AS((void)g0.G_enclosure(Enclosure(), 2), std::runtime_error);
}

TEST_CASE("factor positivity for n >= 4 inside the perturbation window") {
    ContinuedFraction cf = ContinuedFraction::periodic({5, 4});
    GEvaluator g1(cf, 1);
    auto win = perturbation_window(cf, 1);
    Enclosure lo = eps_prime_periodic_exact(cf, 1, 0, {5, 4}).enclose() + win.first.enclose();
    Enclosure hi = eps_prime_periodic_exact(cf, 1, 0, {0, 0}).enclose() + win.second.enclose();
    for (long n = 4; n <= 40; ++n) {
        CHECK(g1.g_factor(n, lo).is_certainly_positive());
        CHECK(g1.g_factor(n, hi).is_certainly_positive());
    }
}

TEST_CASE("interval bound returns the endpoint minimum") {
    GEvaluator g0(ContinuedFraction::periodic({6, 5}), 0);
    Enclosure a(mpq_class(-1, 100)), b(mpq_class(1, 100));
    auto r = G_bound_on_interval(g0, a, b, 8000);
    Enclosure ga = g0.G_enclosure(a, 8000), gb = g0.G_enclosure(b, 8000);
    CHECK(r.first.lo_d() == doctest::Approx(std::min(ga.lo_d(), gb.lo_d())));
}

TEST_CASE("theorem B check fires for [0;(6,2)] and not for [0;(6,5)]") {
    TheoremBReport yes = theoremB_check(ContinuedFraction::periodic({6, 2}), 200000);
    CHECK(yes.fires);
    TheoremBReport no = theoremB_check(ContinuedFraction::periodic({6, 5}), 200000);
    CHECK_FALSE(no.fires);
    CHECK_FALSE(no.undecided);
}

TEST_CASE("remark 4.3 pinned cases") {
    GEvaluator a13(ContinuedFraction::periodic({1, 3}), 1);
    CHECK(a13.G_adaptive(Enclosure(), 1e-3, 1000, 200000).contains(1.158));
    GEvaluator a14(ContinuedFraction::periodic({1, 4}), 1);
    CHECK(a14.G_adaptive(Enclosure(), 1e-3, 1000, 200000).contains(0.9445));
    GEvaluator a24(ContinuedFraction::periodic({2, 4}), 1);
    CHECK(a24.G_adaptive(Enclosure(), 1e-3, 1000, 200000).contains(1.196));
    GEvaluator a25(ContinuedFraction::periodic({2, 5}), 1);
    CHECK(a25.G_adaptive(Enclosure(), 1e-3, 1000, 200000).contains(0.9905));
}

TEST_CASE("double midpoint path tracks the certified enclosure") {
    GEvaluator g0(ContinuedFraction::periodic({6, 5}), 0);
    Enclosure cert = g0.G_enclosure(Enclosure(), 20000);
    double fast = g0.G_mid(0.0, 20000);
    CHECK(fast > cert.lo_d() - 1e-6);
    CHECK(fast < cert.hi_d() + 1e-6);
}
