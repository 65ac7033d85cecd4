#include <doctest.h>

#include <cmath>

#include "sudler/enclosure.hpp"

using namespace sudler;

TEST_CASE("rational construction rounds outward") {
    Enclosure e(mpq_class(1, 3));
    CHECK(e.contains(mpq_class(1, 3)));
    CHECK(e.lo_d() <= 1.0 / 3.0);
    CHECK(e.hi_d() >= 1.0 / 3.0);
    CHECK(e.width() < 1e-30);
}

TEST_CASE("arithmetic keeps the true value inside") {
    Enclosure third(mpq_class(1, 3));
    Enclosure one = third * Enclosure(3L);
    CHECK(one.contains(mpq_class(1)));
    Enclosure z = (third + third) - third * Enclosure(2L);
    CHECK(z.contains_zero());
    Enclosure q = Enclosure(1L) / Enclosure(7L);
    CHECK(q.contains(mpq_class(1, 7)));
}

TEST_CASE("pi is enclosed") {
    Enclosure p = Enclosure::pi();
    mpq_class below(mpz_class("314159265358979323"), mpz_class("100000000000000000"));
    mpq_class above(mpz_class("314159265358979324"), mpz_class("100000000000000000"));
    below.canonicalize();
    above.canonicalize();
    CHECK(p.certainly_greater(below));
    CHECK(p.certainly_less(above));
    CHECK(p.width() < 1e-30);
}

TEST_CASE("square is never negative and tighter than naive product") {
    Enclosure x(mpq_class(-1, 2), mpq_class(1, 3));
    Enclosure s = x.square();
    CHECK(s.lo_d() >= 0.0);
    CHECK(s.contains(mpq_class(0)));
    CHECK(s.contains(mpq_class(1, 4)));
    CHECK_FALSE(s.contains(mpq_class(1, 2)));
}

TEST_CASE("sqrt and log basics") {
    CHECK(Enclosure(4L).sqrt().contains(mpq_class(2)));
    CHECK(Enclosure(1L).log().contains_zero());
    Enclosure e2 = Enclosure(2L).log();
    CHECK(e2.lo_d() < 0.6931471805599454);
    CHECK(e2.hi_d() > 0.6931471805599452);
}

TEST_CASE("comparisons are one-sided certain") {
    Enclosure a(mpq_class(1, 4), mpq_class(1, 3));
    CHECK(a.certainly_less(mpq_class(1, 2)));
    CHECK(a.certainly_greater(mpq_class(1, 8)));
    CHECK_FALSE(a.certainly_less(mpq_class(1, 3)));
    CHECK_FALSE(a.certainly_greater(mpq_class(1, 4)));
}

TEST_CASE("two_abs_sin_pi exact rational special values") {
    Enclosure z = two_abs_sin_pi(mpq_class(1, 2));
    CHECK(z.contains(mpq_class(2)));
    CHECK(z.width() < 1e-30);
    Enclosure zero = two_abs_sin_pi(mpq_class(3));
    CHECK(zero.lo_d() == 0.0);
    CHECK(zero.hi_d() == 0.0);
    // 2 sin(pi/6) = 1 exactly
    CHECK(two_abs_sin_pi(mpq_class(1, 6)).contains(mpq_class(1)));
    // periodicity and reflection (enclosures are far tighter than a double,
    // so compare midpoints rather than asking for containment of a double)
    Enclosure a = two_abs_sin_pi(mpq_class(1, 7));
    CHECK(std::fabs(a.mid_d() - two_abs_sin_pi(mpq_class(8, 7)).mid_d()) < 1e-15);
    CHECK(std::fabs(a.mid_d() - two_abs_sin_pi(mpq_class(6, 7)).mid_d()) < 1e-15);
}

TEST_CASE("two_abs_sin_pi interval overload agrees with rational overload") {
    for (long num = 0; num <= 13; ++num) {
        mpq_class x(num, 13);
        x.canonicalize();
        Enclosure via_interval = two_abs_sin_pi(Enclosure(x));
        Enclosure via_exact = two_abs_sin_pi(x);
        CHECK(std::fabs(via_interval.mid_d() - via_exact.mid_d()) < 1e-15);
    }
}

TEST_CASE("b function") {
    CHECK(b_function(Enclosure(1L)).contains_zero());
    // b(e) = pi e; compare loosely
    Enclosure x(2.718281828459045);
    Enclosure b = b_function(x);
    CHECK(b.lo_d() < 8.53974);
    CHECK(b.hi_d() > 8.53972);
}

TEST_CASE("precision control") {
    mpfr_prec_t old = Enclosure::default_precision();
    Enclosure::set_default_precision(256);
    CHECK(Enclosure::default_precision() == 256);
    Enclosure fine(mpq_class(1, 3));
    CHECK(fine.width() < 1e-70);
    Enclosure::set_default_precision(old);
}
