#include <doctest.h>

#include <cmath>

#include <cstdlib>

#include "sudler/continued_fraction.hpp"
#include "sudler/surd.hpp"

using namespace sudler;

TEST_CASE("parse and print round trip") {
    CHECK(ContinuedFraction::parse("[0;(6,5)]").str() == "[0;(6,5)]");
    CHECK(ContinuedFraction::parse("[1;2,3,(4,5)]").str() == "[1;2,3,(4,5)]");
    CHECK(ContinuedFraction::parse("[0;(6,5,6,5)]").str() == "[0;(6,5)]");  // minimal period
    ContinuedFraction r = ContinuedFraction::parse("3/7");
    CHECK(r.is_finite());
    CHECK(rational_from_cf(r) == mpq_class(3, 7));
    CHECK_THROWS(ContinuedFraction::parse("[0;(6,0)]"));
}

TEST_CASE("rational round trip") {
    for (long num = 1; num < 30; ++num)
        for (long den = num + 1; den < 40; ++den) {
            mpq_class v(num, den);
            v.canonicalize();
            CHECK(rational_from_cf(ContinuedFraction::from_rational(v)) == v);
        }
}

TEST_CASE("golden ratio convergents are Fibonacci") {
    ContinuedFraction phi = ContinuedFraction::periodic({1});
    Convergents c = convergents(phi, 10);
    long fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (size_t k = 0; k <= 10; ++k) CHECK(c.q[k] == fib[k]);
}

TEST_CASE("surd value satisfies its quadratic equation") {
    // [0;(1)] = (sqrt(5)-1)/2 solves x^2 + x - 1 = 0
    QuadraticSurd x = value_of(ContinuedFraction::periodic({1}));
    CHECK((x * x + x - QuadraticSurd(1L)).sign() == 0);
    // [0;(5,4)] = (2 sqrt(30) - 10)/5
    QuadraticSurd y = value_of(ContinuedFraction::periodic({5, 4}));
    CHECK(y == QuadraticSurd(mpz_class(-10), mpz_class(2), mpz_class(30), mpz_class(5)));
}

TEST_CASE("digit recovery from the surd") {
    QuadraticSurd x = value_of(ContinuedFraction::periodic({6, 5, 5}));
    auto digits = cf_from_surd(x, 8);
    long want[] = {0, 6, 5, 5, 6, 5, 5, 6};
    for (size_t k = 0; k < 8; ++k) CHECK(digits[k] == want[k]);
}

TEST_CASE("gauss map shifts digits") {
    QuadraticSurd x = value_of(ContinuedFraction::parse("[0;3,(6,5)]"));
    QuadraticSurd shifted = gauss_map(x);
    CHECK(shifted == value_of(ContinuedFraction::periodic({6, 5})));
    QuadraticSurd y = value_of(ContinuedFraction::periodic({5, 4}));
    CHECK(gauss_map(y) == value_of(ContinuedFraction::periodic({4, 5})));
}

TEST_CASE("delta recurrence delta_{k-1} = a_{k+1} delta_k + delta_{k+1}") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5});
    for (size_t k = 1; k <= 6; ++k) {
        QuadraticSurd lhs = delta_exact(cf, k - 1);
        QuadraticSurd rhs =
            QuadraticSurd(cf.digit(k + 1)) * delta_exact(cf, k) + delta_exact(cf, k + 1);
        CHECK((lhs - rhs).sign() == 0);
    }
    CHECK(delta_exact(cf, 3) < delta_exact(cf, 2));
}

TEST_CASE("rotation surds and limit constants match hand-computed values") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5});
    // pinned: sigma_0 = 0.193743884534..., sigma_1 = 0.161453237111...
    CHECK(std::fabs(rotation_surds(cf, 0).second.enclose().mid_d() - 0.193743884534) < 1e-9);
    CHECK(std::fabs(rotation_surds(cf, 1).second.enclose().mid_d() - 0.161453237111) < 1e-9);
    // pinned: C(0) = 0.156556072771..., C(1) = 0.187867287325...
    CHECK(std::fabs(limit_constant(cf, 0).enclose().mid_d() - 0.156556072771) < 1e-9);
    CHECK(std::fabs(limit_constant(cf, 1).enclose().mid_d() - 0.187867287325) < 1e-9);
    // tau_r is the forward tail
    CHECK(rotation_surds(cf, 0).first == value_of(ContinuedFraction::periodic({6, 5})));
    CHECK(rotation_surds(cf, 1).first == value_of(ContinuedFraction::periodic({5, 6})));
}

TEST_CASE("Ostrowski expansion: known digit vectors") {
    ContinuedFraction phi = ContinuedFraction::periodic({1});
    std::vector<long> d4 = ostrowski(phi, 4);  // 4 = q_1 + q_3 = 1*q_1 ... = (0,1,0,1)
    CHECK(d4 == std::vector<long>{0, 1, 0, 1});
    ContinuedFraction cf54 = ContinuedFraction::periodic({5, 4});
    CHECK(ostrowski(cf54, 27) == std::vector<long>{1, 1, 1});  // 1 + 5 + 21
    CHECK(ostrowski(cf54, 0) == std::vector<long>{0});
}

TEST_CASE("Ostrowski round trip and legality, sampled") {
    ContinuedFraction cf = ContinuedFraction::periodic({6, 5, 5});
    Convergents c = convergents(cf, 30);
    unsigned long seed = 12345;
    for (int t = 0; t < 500; ++t) {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        mpz_class N = static_cast<long>(seed % 100000) + 1;
        std::vector<long> d = ostrowski(cf, N);
        mpz_class back = 0;
        for (size_t i = 0; i < d.size(); ++i) {
            back += d[i] * c.q[i];
            CHECK(d[i] >= 0);
            CHECK(d[i] <= cf.digit(i + 1));
            if (i > 0 && d[i] == cf.digit(i + 1)) CHECK(d[i - 1] == 0);
        }
        CHECK(back == N);
    }
}

TEST_CASE("admissibility caps and carry rule") {
    ContinuedFraction cf = ContinuedFraction::periodic({5, 4});
    // w.r.t. r = 1 the caps are (5,4,5,4,...)
    CHECK(is_admissible({5, 0, 5, 0}, 1, cf));
    CHECK_FALSE(is_admissible({5, 4}, 1, cf));      // 4 = cap follows nonzero
    CHECK(is_admissible({0, 4, 0, 4}, 1, cf));
    CHECK_FALSE(is_admissible({0, 5}, 1, cf));      // exceeds cap 4 in slot 2
    CHECK(is_admissible({4, 1, 2, 3}, 0, cf));      // caps (4,5,4,5) w.r.t. r = 0
    CHECK_FALSE(is_admissible({5, 1}, 0, cf));
}

TEST_CASE("forward tail") {
    ContinuedFraction cf = ContinuedFraction::parse("[0;3,(6,5)]");
    CHECK(forward_tail(cf, 2).str() == "[0;(6,5)]");
    CHECK(forward_tail(cf, 3).str() == "[0;(5,6)]");
}
