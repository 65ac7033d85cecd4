#pragma once
// Directed-rounded interval arithmetic on top of MPFR.
//
// An Enclosure is a pair [lo, hi] of MPFR numbers with the guarantee that the
// mathematical value it describes lies inside the closed interval.  Every
// operation rounds the lower endpoint towards -inf and the upper endpoint
// towards +inf, so enclosures are sound under composition.

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace sudler {

class Enclosure {
public:
    // Global working precision (significand bits) for newly created values.
    // Initialised from the SUDLER_PRECISION environment variable when present.
    static mpfr_prec_t default_precision();
    static void set_default_precision(mpfr_prec_t bits);

    Enclosure();                                   // [0, 0]
    explicit Enclosure(long v);
    explicit Enclosure(const mpz_class& v);
    explicit Enclosure(const mpq_class& v);        // tight outward rounding
    Enclosure(const mpq_class& lo, const mpq_class& hi);
    explicit Enclosure(double v);

    Enclosure(const Enclosure& o);
    Enclosure(Enclosure&& o) noexcept;
    Enclosure& operator=(const Enclosure& o);
    Enclosure& operator=(Enclosure&& o) noexcept;
    ~Enclosure();

    // Endpoints, rounded outward when converted.
    double lo_d() const;
    double hi_d() const;
    double mid_d() const { return (lo_d() + hi_d()) / 2.0; }
    double width() const;
    mpfr_srcptr lo_raw() const { return lo_; }
    mpfr_srcptr hi_raw() const { return hi_; }

    bool contains_zero() const;
    bool contains(const mpq_class& v) const;
    bool contains(double v) const;
    bool is_certainly_positive() const;
    bool is_certainly_negative() const;
    // hi < o.lo: every value of *this is below every value of o.
    bool certainly_less(const Enclosure& o) const;
    bool certainly_less(const mpq_class& v) const;
    bool certainly_greater(const mpq_class& v) const;
    bool certainly_less(double v) const;
    bool certainly_greater(double v) const;

    Enclosure operator+(const Enclosure& o) const;
    Enclosure operator-(const Enclosure& o) const;
    Enclosure operator*(const Enclosure& o) const;
    Enclosure operator/(const Enclosure& o) const;  // o must not contain 0
    Enclosure operator-() const;
    Enclosure& operator+=(const Enclosure& o) { return *this = *this + o; }
    Enclosure& operator-=(const Enclosure& o) { return *this = *this - o; }
    Enclosure& operator*=(const Enclosure& o) { return *this = *this * o; }
    Enclosure& operator/=(const Enclosure& o) { return *this = *this / o; }

    Enclosure abs() const;
    Enclosure sqrt() const;     // requires hi >= 0; lo clamped to 0 if slightly negative
    Enclosure log() const;      // requires lo > 0
    Enclosure square() const;   // tighter than x*x (never negative)
    Enclosure hull(const Enclosure& o) const;

    static Enclosure pi();
    // sqrt of a non-negative integer, outward-rounded.
    static Enclosure sqrt_z(const mpz_class& d);

    std::string str(int digits = 17) const;

private:
    explicit Enclosure(mpfr_prec_t prec, bool /*tag*/);
    mpfr_t lo_, hi_;
    friend Enclosure two_abs_sin_pi(const Enclosure& x);
    friend Enclosure b_function(const Enclosure& x);
};

// 2*|sin(pi*x)| for an arbitrary real enclosure x (argument reduced mod 1
// using exact integer floors of the endpoints).
Enclosure two_abs_sin_pi(const Enclosure& x);
// Same for an exact rational argument (exact reduction, zero detected exactly).
Enclosure two_abs_sin_pi(const mpq_class& x);
// b(x) = pi * x * log(x); requires x > 0.
Enclosure b_function(const Enclosure& x);

}  // namespace sudler
