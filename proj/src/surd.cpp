#include "sudler/surd.hpp"

#include <algorithm>

namespace sudler {

namespace {

// Extract the largest square factor: d = f^2 * rest with rest square-free
// (complete for rest whose prime factors are below the trial bound; all
// discriminants arising from bounded-digit periodic continued fractions are
// far below it).
void extract_square(mpz_class& d, mpz_class& f) {
    f = 1;
    if (d <= 1) return;
    mpz_class root;
    if (mpz_perfect_square_p(d.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
        f = root;
        d = 1;
        return;
    }
    for (unsigned long p = 2; p <= 100000; ++p) {
        mpz_class p2 = mpz_class(p) * p;
        if (p2 > d) break;
        while (mpz_divisible_p(d.get_mpz_t(), p2.get_mpz_t())) {
            d /= p2;
            f *= p;
        }
    }
}

}  // namespace

QuadraticSurd::QuadraticSurd() : a_(0), b_(0), d_(1), s_(1) {}

QuadraticSurd::QuadraticSurd(const mpq_class& v)
    : a_(v.get_num()), b_(0), d_(1), s_(v.get_den()) {}

QuadraticSurd::QuadraticSurd(long v) : a_(v), b_(0), d_(1), s_(1) {}

QuadraticSurd::QuadraticSurd(const mpz_class& a, const mpz_class& b, const mpz_class& d,
                             const mpz_class& s)
    : a_(a), b_(b), d_(d), s_(s) {
    if (s_ == 0) throw std::invalid_argument("QuadraticSurd: zero denominator");
    if (d_ <= 0) throw std::invalid_argument("QuadraticSurd: d must be positive");
    canonicalize();
}

void QuadraticSurd::canonicalize() {
    if (b_ == 0) {
        d_ = 1;
    } else {
        mpz_class f;
        extract_square(d_, f);
        b_ *= f;
        if (d_ == 1) {  // sqrt(d) was rational after all
            a_ += b_;
            b_ = 0;
        }
    }
    if (s_ < 0) {
        s_ = -s_;
        a_ = -a_;
        b_ = -b_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s_.get_mpz_t());
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        s_ /= g;
    }
}

mpq_class QuadraticSurd::to_rational() const {
    if (!is_rational()) throw std::domain_error("surd is irrational");
    mpq_class q(a_, s_);
    q.canonicalize();
    return q;
}

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
    if (!is_rational() && !o.is_rational() && d_ != o.d_)
        throw std::domain_error("surd addition across different fields");
    mpz_class d = is_rational() ? o.d_ : d_;
    return QuadraticSurd(a_ * o.s_ + o.a_ * s_, b_ * o.s_ + o.b_ * s_, d, s_ * o.s_);
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const { return *this + (-o); }

QuadraticSurd QuadraticSurd::operator-() const {
    QuadraticSurd r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
    if (!is_rational() && !o.is_rational() && d_ != o.d_)
        throw std::domain_error("surd multiplication across different fields");
    mpz_class d = is_rational() ? o.d_ : d_;
    // (a1 + b1 r)(a2 + b2 r) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) r
    return QuadraticSurd(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + o.a_ * b_, d, s_ * o.s_);
}

QuadraticSurd QuadraticSurd::inverse() const {
    if (sign() == 0) throw std::domain_error("inverse of zero surd");
    // s / (a + b sqrt d) = s (a - b sqrt d) / (a^2 - b^2 d)
    mpz_class n = a_ * a_ - b_ * b_ * d_;
    return QuadraticSurd(s_ * a_, -s_ * b_, d_, n);
}

QuadraticSurd QuadraticSurd::operator/(const QuadraticSurd& o) const {
    return *this * o.inverse();
}

QuadraticSurd QuadraticSurd::conjugate() const {
    QuadraticSurd r = *this;
    r.b_ = -r.b_;
    return r;
}

int QuadraticSurd::sign() const {
    // sign of a + b sqrt(d) (s > 0 by canonical form)
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 d; equality impossible since
    // sqrt(d) is irrational in canonical form when b != 0
    int c = cmp(a_ * a_, b_ * b_ * d_);
    // |a| > |b| sqrt(d)  <=>  a^2 > b^2 d  => sign of a wins
    return c > 0 ? sa : sb;
}

bool QuadraticSurd::operator==(const QuadraticSurd& o) const {
    return a_ == o.a_ && b_ == o.b_ && d_ == o.d_ && s_ == o.s_;
}

mpz_class QuadraticSurd::floor() const {
    if (is_rational()) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_.get_mpz_t(), s_.get_mpz_t());
        return q;
    }
    // Numerator a + b sqrt(d) lies strictly inside a unit interval with
    // integer endpoints derived from isqrt(b^2 d).
    mpz_class b2d = b_ * b_ * d_;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), b2d.get_mpz_t());
    mpz_class approx = (b_ > 0) ? mpz_class(a_ + root) : mpz_class(a_ - root - 1);
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), approx.get_mpz_t(), s_.get_mpz_t());
    // Correct by exact comparison: need n <= x < n+1.
    auto cmp_with_int = [&](const mpz_class& m) {
        // sign of (a - m s) + b sqrt(d)
        QuadraticSurd diff(a_ - m * s_, b_, d_, s_);
        return diff.sign();
    };
    while (cmp_with_int(n) < 0) n -= 1;
    while (cmp_with_int(n + 1) >= 0) n += 1;
    return n;
}

QuadraticSurd QuadraticSurd::frac() const {
    return *this - QuadraticSurd(mpq_class(floor()));
}

Enclosure QuadraticSurd::enclose() const {
    // Raise the working precision above the coefficient sizes so that the
    // cancellation between a/s and (b/s) sqrt(d) keeps full accuracy.
    mpfr_prec_t base = Enclosure::default_precision();
    size_t bits = std::max({mpz_sizeinbase(a_.get_mpz_t(), 2),
                            mpz_sizeinbase(b_.get_mpz_t(), 2),
                            mpz_sizeinbase(s_.get_mpz_t(), 2)});
    mpfr_prec_t work = base + static_cast<mpfr_prec_t>(bits) + 8;
    mpfr_prec_t saved = Enclosure::default_precision();
    Enclosure::set_default_precision(work);
    Enclosure r;
    try {
        r = (Enclosure(a_) + Enclosure(b_) * Enclosure::sqrt_z(d_)) / Enclosure(s_);
    } catch (...) {
        Enclosure::set_default_precision(saved);
        throw;
    }
    Enclosure::set_default_precision(saved);
    // Round back to base precision.
    return r + Enclosure();
}

std::string QuadraticSurd::str() const {
    if (is_rational()) {
        mpq_class q = to_rational();
        return q.get_str();
    }
    return "(" + a_.get_str() + " + " + b_.get_str() + "*sqrt(" + d_.get_str() + "))/" +
           s_.get_str();
}

}  // namespace sudler
