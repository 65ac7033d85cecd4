#include <doctest.h>

#include <cmath>
#include <vector>

#include "sudler/continued_fraction.hpp"
#include "sudler/period_verify.hpp"
#include "sudler/sudler_eval.hpp"

using namespace sudler;

TEST_CASE("tail coefficients: pinned constants for [0;(5,4)] and [0;(6,5)]") {
    ContinuedFraction cf54 = ContinuedFraction::periodic({5, 4});
    TailCoefficients t0 = tail_coefficients(cf54, 0);
    CHECK(std::fabs(t0.alpha_pi.enclose().mid_d() - 0.04554884989) < 1e-9);
    CHECK(std::fabs(t0.c[0].enclose().mid_d() - 0.18257418583) < 1e-9);
    // c_{r,2} = C(r) alpha_pi for period length 2
    CHECK((t0.c[2] - t0.c[0] * t0.alpha_pi).sign() == 0);
    CHECK(t0.L.sign() < 0);
    CHECK(t0.U.sign() > 0);
    TailCoefficients t1 = tail_coefficients(cf54, 1);
    CHECK(std::fabs(t1.c[0].enclose().mid_d() - 0.22821773229) < 1e-9);
    CHECK((t1.alpha_pi - t0.alpha_pi).sign() == 0);

    ContinuedFraction cf65 = ContinuedFraction::periodic({6, 5});
    CHECK(std::fabs(tail_coefficients(cf65, 0).alpha_pi.enclose().mid_d() - 0.031280577328) < 1e-9);
}

TEST_CASE("eps_prime: exact periodic closed form matches pinned values") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5});
    QuadraticSurd e00 = eps_prime_periodic_exact(cf, 0, 0, {1, 1});
    QuadraticSurd e10 = eps_prime_periodic_exact(cf, 1, 0, {1, 1});
    CHECK(std::fabs(e00.enclose().mid_d() - -0.026255917606) < 1e-9);
    CHECK(std::fabs(e10.enclose().mid_d() - -0.025244858217) < 1e-9);
    // k shifts by C(r): eps'_{r,k} - eps'_{r,0} = k C(r)
    QuadraticSurd e02 = eps_prime_periodic_exact(cf, 0, 2, {1, 1});
    CHECK((e02 - e00 - QuadraticSurd(2L) * limit_constant(cf, 0)).sign() == 0);
}

TEST_CASE("truncated eps_prime encloses the exact periodic value") {
    ContinuedFraction cf = ContinuedFraction::periodic({5, 4});
    for (long r = 0; r < 2; ++r)
        for (long k = 0; k <= 2; ++k) {
            QuadraticSurd exact = eps_prime_periodic_exact(cf, r, k, {4, 5});
            std::vector<long> tail;
            for (int j = 0; j < 12; ++j) tail.push_back(j % 2 == 0 ? 4 : 5);
            Enclosure approx = eps_prime(cf, r, k, tail, 12);
            CHECK(approx.contains(exact.enclose().mid_d()));
        }
}

TEST_CASE("closed form for a finite head is consistent with the series") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5, 5});
    std::vector<long> head = {2, 1, 3};
    Enclosure series = eps_prime(cf, 1, 1, head, 3);
    Enclosure closed = eps_prime_closed(cf, 1, 1, head);
    // the series carries a remainder bound; the closed form is its center term
    CHECK(series.contains(closed.mid_d()));
}

TEST_CASE("perturbation window brackets admissible-tail deviations") {
    ContinuedFraction cf = ContinuedFraction::periodic({5, 4});
    for (long r = 0; r < 2; ++r) {
        auto [L, U] = perturbation_window(cf, r);
        // deviation of any admissible periodic tail from its own head
        for (const auto& tail : std::vector<std::vector<long>>{
                 {0, 0}, {4, 5}, {5, 4}, {0, 4}, {1, 1}, {5, 0}}) {
            if (tail[0] > cf.period[static_cast<size_t>(r % 2)]) continue;
            QuadraticSurd full = eps_prime_periodic_exact(cf, r, 0, tail);
            std::vector<long> head = {tail[0], tail[1]};
            QuadraticSurd dev = full - eps_prime_closed_exact(cf, r, 0, head);
            CHECK(dev >= L);
            CHECK(dev <= U);
        }
    }
}

TEST_CASE("Pi context: exact ones and positive certified lower bounds") {
    ContinuedFraction cf = ContinuedFraction::periodic({5, 4});
    PiContext ctx(cf);
    Enclosure one = ctx.Pi_lower(0, {0, 0, 3, 2}, 2000);
    CHECK(one.width() == 0.0);
    CHECK(one.contains(mpq_class(1)));
    Enclosure p = ctx.Pi_lower(1, {1, 1, 1, 1}, 4000);
    CHECK(p.is_certainly_positive());
    CHECK(p.lo_d() > 0.5);
    // memoization: repeated call yields the same interval
    Enclosure p2 = ctx.Pi_lower(1, {1, 1, 1, 1}, 4000);
    CHECK(p.lo_d() == p2.lo_d());
    CHECK(p.hi_d() == p2.hi_d());
    // a enters only via a != 0
    Enclosure p3 = ctx.Pi_lower(1, {3, 1, 1, 1}, 4000);
    CHECK(p.lo_d() == p3.lo_d());
}

TEST_CASE("Pi lower bound is sound against direct evaluation at a sampled tail") {
    ContinuedFraction cf = ContinuedFraction::periodic({5, 4});
    PiContext ctx(cf);
    long T = 8000;
    // stream ... b_{i-1}=1, b_i=2, then periodic (4,5) tail at residue r=1
    std::vector<long> tuple = {1, 2, 4, 5};
    Enclosure lower = ctx.Pi_lower(1, tuple, T);
    // direct: G_1 at the true eps of this periodic tail, times shifted factor
    Enclosure direct(1L);
    for (long k = 1; k <= tuple[1] - 1; ++k) {
        Enclosure e = eps_prime_periodic_exact(cf, 1, k, {4, 5}).enclose();
        direct *= ctx.evaluator(1).G_enclosure(e, T);
    }
    Enclosure e0 = eps_prime_periodic_exact(cf, 0, 0, {2, 4}).enclose();
    direct *= ctx.evaluator(0).G_enclosure(e0, T);
    CHECK(lower.lo_d() <= direct.hi_d());
}

TEST_CASE("eps convergence scan finds a clean middle window") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5});
    EpsConvergenceReport rep = eps_convergence_test(cf, {1, 1}, 0, 1e-4, 40);
    CHECK(rep.found);
    CHECK(rep.I0 <= 12);
    CHECK(rep.J0 <= 12);
    REQUIRE(rep.deviations.size() == 39);  // one per interior level i = 1..n-1
    // deviations shrink away from the top end
    CHECK(rep.deviations[19] < 1e-4);
}
