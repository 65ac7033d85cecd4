#include <doctest.h>

#include <cmath>

#include "sudler/continued_fraction.hpp"
#include "sudler/sudler_eval.hpp"
#include "sudler/surd.hpp"

using namespace sudler;

TEST_CASE("P_N basics") {
    QuadraticSurd phi = value_of(ContinuedFraction::periodic({1}));
    CHECK(::sudler::sudler(phi, 0).contains(mpq_class(1)));  // empty product
    // P_1 = 2|sin(pi phi)|, brute double check
    double a = 0.6180339887498949;
    double want = 2.0 * std::fabs(std::sin(3.141592653589793 * a));
    Enclosure p1 = ::sudler::sudler(phi, 1);
    CHECK(p1.lo_d() < want + 1e-12);
    CHECK(p1.hi_d() > want - 1e-12);
    // brute-force product for N = 7
    double prod = 1.0;
    for (int r = 1; r <= 7; ++r) prod *= 2.0 * std::fabs(std::sin(3.141592653589793 * r * a));
    Enclosure p7 = ::sudler::sudler(phi, 7);
    CHECK(p7.lo_d() < prod + 1e-9);
    CHECK(p7.hi_d() > prod - 1e-9);
}

TEST_CASE("rational alpha gives exact zeros at and beyond the denominator") {
    CHECK(::sudler::sudler(mpq_class(1, 2), 2).lo_d() == 0.0);
    CHECK(::sudler::sudler(mpq_class(1, 2), 2).hi_d() == 0.0);
    CHECK(::sudler::sudler(mpq_class(2, 5), 7).hi_d() == 0.0);
    CHECK(::sudler::sudler(mpq_class(1, 3), 2).is_certainly_positive());
}

TEST_CASE("perturbed product at eps = 0 equals the plain product at q_n") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5});
    Convergents c = convergents(cf, 4);
    QuadraticSurd alpha = value_of(cf);
    for (size_t n = 1; n <= 4; ++n) {
        Enclosure plain = ::sudler::sudler(alpha, c.q[n]);
        Enclosure pert = sudler_perturbed(cf, n, Enclosure());
        CHECK(plain.lo_d() <= pert.hi_d());
        CHECK(pert.lo_d() <= plain.hi_d());
    }
}

TEST_CASE("perturbation sign convention: eps shifts along (-1)^n") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5});
    // A positive eps at even n moves each argument up; at odd n down.  The two
    // must differ (sanity that the sign is actually applied).
    Enclosure e(mpq_class(1, 100));
    Enclosure up = sudler_perturbed(cf, 2, e);
    Enclosure dn = sudler_perturbed(cf, 2, -e);
    CHECK(std::fabs(up.mid_d() - dn.mid_d()) > 1e-6);
}

TEST_CASE("decomposition identity of Prop 2.1") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5});
    QuadraticSurd alpha = value_of(cf);
    for (long N : {7L, 45L, 100L, 300L, 991L}) {
        Decomposition d = decompose(cf, N);
        Enclosure full = d.top;
        for (const auto& k : d.kfactors) full *= k.value;
        Enclosure direct = ::sudler::sudler(alpha, N);
        // same value: intervals overlap and the flat product agrees too
        CHECK_FALSE(full.certainly_less(direct));
        CHECK_FALSE(direct.certainly_less(full));
        Enclosure flat(1L);  // terms already include the top factor
        for (const auto& t : d.terms) flat *= t.factor;
        CHECK_FALSE(flat.certainly_less(direct));
        CHECK_FALSE(direct.certainly_less(flat));
    }
}

TEST_CASE("K factors (with the top) multiply to the flat term product") {
    ContinuedFraction cf = ContinuedFraction::periodic({5, 4});
    Decomposition d = decompose(cf, 137);
    Enclosure via_k = d.top;
    for (const auto& k : d.kfactors) via_k *= k.value;
    Enclosure via_terms(1L);
    for (const auto& t : d.terms) via_terms *= t.factor;
    // the same real number lies in both enclosures
    CHECK_FALSE(via_k.certainly_less(via_terms));
    CHECK_FALSE(via_terms.certainly_less(via_k));
}

TEST_CASE("epsilon_ik magnitudes stay below q_i delta_{i-1} scale") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5});
    std::vector<long> digits = ostrowski(cf, 12345);
    size_t n = digits.size() - 1;
    for (size_t i = 1; i <= n; ++i) {
        Enclosure e = epsilon_ik_exact(cf, digits, i, 0).enclose();
        CHECK(e.abs().hi_d() < 1.0);  // |eps_{i,0}| < 1 for these parameters
    }
}

TEST_CASE("H_k is positive and finite") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5});
    Enclosure h = H_k(cf, 4, Enclosure());
    CHECK(h.is_certainly_positive());
    CHECK(h.hi_d() < 1e6);
}

TEST_CASE("vanishing subsequence demonstrator finds decreasing partial products") {
    // [0;(6,2)] has G_0 = 0.846... < 1, so small perturbed products exist.
    ContinuedFraction cf = ContinuedFraction::periodic({6, 2});
    auto steps = vanishing_subsequence(cf, 0.01, 0.95, 2, 100000);
    REQUIRE(steps.size() == 2);
    CHECK(steps[1].q >= 2 * steps[0].q);
    CHECK(steps[0].N < steps[1].N);
}
