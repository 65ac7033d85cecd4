#pragma once
// Exact arithmetic in real quadratic fields: numbers (a + b*sqrt(d)) / s.
//
// Canonical form: d square-free (d = 1 exactly when the value is rational,
// in which case b = 0), s > 0, gcd(a, b, s) = 1.  All comparisons and floors
// are computed with integer arithmetic only, never floating point.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "sudler/enclosure.hpp"

namespace sudler {

class QuadraticSurd {
public:
    QuadraticSurd();  // 0
    QuadraticSurd(const mpq_class& v);
    QuadraticSurd(long v);
    QuadraticSurd(const mpz_class& a, const mpz_class& b, const mpz_class& d,
                  const mpz_class& s);

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& d() const { return d_; }
    const mpz_class& s() const { return s_; }

    bool is_rational() const { return b_ == 0; }
    mpq_class to_rational() const;  // requires is_rational()

    QuadraticSurd operator+(const QuadraticSurd& o) const;
    QuadraticSurd operator-(const QuadraticSurd& o) const;
    QuadraticSurd operator*(const QuadraticSurd& o) const;
    QuadraticSurd operator/(const QuadraticSurd& o) const;
    QuadraticSurd operator-() const;
    QuadraticSurd& operator+=(const QuadraticSurd& o) { return *this = *this + o; }
    QuadraticSurd& operator-=(const QuadraticSurd& o) { return *this = *this - o; }
    QuadraticSurd& operator*=(const QuadraticSurd& o) { return *this = *this * o; }

    QuadraticSurd inverse() const;
    QuadraticSurd conjugate() const;  // (a - b sqrt(d)) / s

    int sign() const;  // exact, integer arithmetic only
    bool operator==(const QuadraticSurd& o) const;
    bool operator<(const QuadraticSurd& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadraticSurd& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QuadraticSurd& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QuadraticSurd& o) const { return (*this - o).sign() >= 0; }

    mpz_class floor() const;          // exact floor
    QuadraticSurd frac() const;       // *this - floor()

    // Certified enclosure.  The working precision is automatically raised
    // above the bit length of the coefficients so that cancellation between
    // a/s and (b/s)*sqrt(d) cannot destroy the accuracy of the result.
    Enclosure enclose() const;

    std::string str() const;

private:
    void canonicalize();
    mpz_class a_, b_, d_, s_;
};

}  // namespace sudler
