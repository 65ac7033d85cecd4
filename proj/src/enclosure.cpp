#include "sudler/enclosure.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace sudler {

namespace {

mpfr_prec_t& precision_slot() {
    static mpfr_prec_t prec = [] {
        long bits = 128;
        if (const char* env = std::getenv("SUDLER_PRECISION")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v >= MPFR_PREC_MIN && v <= 1 << 20) bits = v;
        }
        return static_cast<mpfr_prec_t>(bits);
    }();
    return prec;
}

// Cached enclosure of pi at the current default precision.
struct PiCache {
    mpfr_t lo, hi;
    mpfr_prec_t prec = 0;
    ~PiCache() {
        if (prec != 0) {
            mpfr_clear(lo);
            mpfr_clear(hi);
        }
    }
    void refresh(mpfr_prec_t p) {
        if (prec == p) return;
        if (prec != 0) {
            mpfr_clear(lo);
            mpfr_clear(hi);
        }
        mpfr_init2(lo, p);
        mpfr_init2(hi, p);
        mpfr_const_pi(lo, MPFR_RNDD);
        mpfr_const_pi(hi, MPFR_RNDU);
        prec = p;
    }
};

PiCache& pi_cache() {
    static PiCache c;
    c.refresh(precision_slot());
    return c;
}

}  // namespace

mpfr_prec_t Enclosure::default_precision() { return precision_slot(); }

void Enclosure::set_default_precision(mpfr_prec_t bits) {
    if (bits < MPFR_PREC_MIN) throw std::invalid_argument("precision too small");
    precision_slot() = bits;
}

Enclosure::Enclosure(mpfr_prec_t prec, bool) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
}

Enclosure::Enclosure() : Enclosure(default_precision(), true) {
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(long v) : Enclosure(default_precision(), true) {
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

Enclosure::Enclosure(const mpz_class& v) : Enclosure(default_precision(), true) {
    mpfr_set_z(lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_, v.get_mpz_t(), MPFR_RNDU);
}

Enclosure::Enclosure(const mpq_class& v) : Enclosure(default_precision(), true) {
    mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

Enclosure::Enclosure(const mpq_class& lo, const mpq_class& hi)
    : Enclosure(default_precision(), true) {
    if (lo > hi) throw std::invalid_argument("Enclosure: lo > hi");
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Enclosure::Enclosure(double v) : Enclosure(default_precision(), true) {
    mpfr_set_d(lo_, v, MPFR_RNDD);
    mpfr_set_d(hi_, v, MPFR_RNDU);
}

Enclosure::Enclosure(const Enclosure& o) {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& o) noexcept {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    mpfr_init2(o.lo_, MPFR_PREC_MIN);
    mpfr_init2(o.hi_, MPFR_PREC_MIN);
}

Enclosure& Enclosure::operator=(const Enclosure& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
        mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    return *this;
}

Enclosure::~Enclosure() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

double Enclosure::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Enclosure::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Enclosure::width() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

bool Enclosure::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Enclosure::contains(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Enclosure::contains(double v) const {
    return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

bool Enclosure::is_certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Enclosure::is_certainly_negative() const { return mpfr_sgn(hi_) < 0; }

bool Enclosure::certainly_less(const Enclosure& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}
bool Enclosure::certainly_less(const mpq_class& v) const {
    return mpfr_cmp_q(hi_, v.get_mpq_t()) < 0;
}
bool Enclosure::certainly_greater(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) > 0;
}
bool Enclosure::certainly_less(double v) const { return mpfr_cmp_d(hi_, v) < 0; }
bool Enclosure::certainly_greater(double v) const { return mpfr_cmp_d(lo_, v) > 0; }

Enclosure Enclosure::operator+(const Enclosure& o) const {
    Enclosure r(default_precision(), true);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator-(const Enclosure& o) const {
    Enclosure r(default_precision(), true);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator*(const Enclosure& o) const {
    Enclosure r(default_precision(), true);
    mpfr_t t;
    mpfr_init2(t, default_precision());
    // lower endpoint: min over the four products, each rounded down
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // upper endpoint: max over the four products, each rounded up
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Enclosure Enclosure::operator/(const Enclosure& o) const {
    if (o.contains_zero()) throw std::domain_error("Enclosure division by interval containing 0");
    Enclosure inv(default_precision(), true);
    mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    return *this * inv;
}

Enclosure Enclosure::operator-() const {
    Enclosure r(default_precision(), true);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::abs() const {
    Enclosure r(default_precision(), true);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::sqrt() const {
    if (mpfr_sgn(hi_) < 0) throw std::domain_error("sqrt of negative enclosure");
    Enclosure r(default_precision(), true);
    if (mpfr_sgn(lo_) <= 0) {
        mpfr_set_zero(r.lo_, 1);
    } else {
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    }
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::log() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log of non-positive enclosure");
    Enclosure r(default_precision(), true);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::square() const {
    Enclosure r(default_precision(), true);
    if (mpfr_sgn(lo_) >= 0) {
        mpfr_sqr(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) <= 0) {
        mpfr_sqr(r.lo_, hi_, MPFR_RNDD);
        mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_, 1);
        mpfr_t t;
        mpfr_init2(t, default_precision());
        mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
        mpfr_sqr(t, hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
    }
    return r;
}

Enclosure Enclosure::hull(const Enclosure& o) const {
    Enclosure r(default_precision(), true);
    mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::pi() {
    Enclosure r(default_precision(), true);
    PiCache& c = pi_cache();
    mpfr_set(r.lo_, c.lo, MPFR_RNDD);
    mpfr_set(r.hi_, c.hi, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::sqrt_z(const mpz_class& d) {
    if (d < 0) throw std::domain_error("sqrt_z of negative integer");
    Enclosure r = Enclosure(d);
    return r.sqrt();
}

std::string Enclosure::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "[%.*Rg, %.*Rg]", digits, lo_, digits, hi_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

namespace {

// Bounds on sin(pi * t) for an exact mpfr point t in [0, 1].
// upper=false: result <= sin(pi t).  upper=true: result >= sin(pi t).
void sin_pi_point(mpfr_t out, const mpfr_t t, bool upper) {
    mpfr_prec_t prec = Enclosure::default_precision();
    PiCache& pc = pi_cache();
    mpfr_t u, p, half;
    mpfr_init2(u, prec);
    mpfr_init2(p, prec);
    mpfr_init2(half, prec);
    mpfr_set_d(half, 0.5, MPFR_RNDN);

    // reflect onto [0, 1/2]: sin(pi t) = sin(pi (1 - t))
    if (mpfr_cmp(t, half) > 0) {
        // for a lower bound we need u <= 1 - t, for an upper bound u >= 1 - t
        mpfr_ui_sub(u, 1, t, upper ? MPFR_RNDU : MPFR_RNDD);
        if (mpfr_sgn(u) < 0) mpfr_set_zero(u, 1);
    } else {
        mpfr_set(u, t, MPFR_RNDN);  // exact copy
    }

    if (!upper) {
        mpfr_mul(p, pc.lo, u, MPFR_RNDD);  // p <= pi*u <= pi/2
        mpfr_sin(out, p, MPFR_RNDD);
        if (mpfr_sgn(out) < 0) mpfr_set_zero(out, 1);
    } else {
        mpfr_mul(p, pc.hi, u, MPFR_RNDU);  // p >= pi*u
        // sin is increasing only up to pi/2; if p may exceed it, clamp to 1
        mpfr_t pihalf;
        mpfr_init2(pihalf, prec);
        mpfr_div_2ui(pihalf, pc.lo, 1, MPFR_RNDD);
        if (mpfr_cmp(p, pihalf) > 0) {
            mpfr_set_ui(out, 1, MPFR_RNDU);
        } else {
            mpfr_sin(out, p, MPFR_RNDU);
            if (mpfr_cmp_ui(out, 1) > 0) mpfr_set_ui(out, 1, MPFR_RNDU);
        }
        mpfr_clear(pihalf);
    }
    mpfr_clear(u);
    mpfr_clear(p);
    mpfr_clear(half);
}

}  // namespace

Enclosure two_abs_sin_pi(const Enclosure& x) {
    mpfr_prec_t prec = Enclosure::default_precision();
    mpz_class flo, fhi;
    mpfr_get_z(flo.get_mpz_t(), x.lo_raw(), MPFR_RNDD);
    mpfr_get_z(fhi.get_mpz_t(), x.hi_raw(), MPFR_RNDD);
    mpz_class span = fhi - flo;

    mpfr_t tlo, thi, a, b;
    mpfr_init2(tlo, prec);
    mpfr_init2(thi, prec);
    mpfr_init2(a, prec);
    mpfr_init2(b, prec);

    if (span == 0) {
        mpfr_sub_z(tlo, x.lo_raw(), flo.get_mpz_t(), MPFR_RNDD);
        mpfr_sub_z(thi, x.hi_raw(), flo.get_mpz_t(), MPFR_RNDU);
        if (mpfr_sgn(tlo) < 0) mpfr_set_zero(tlo, 1);
        if (mpfr_cmp_ui(thi, 1) > 0) mpfr_set_ui(thi, 1, MPFR_RNDU);
        bool lo_left = mpfr_cmp_d(thi, 0.5) <= 0;   // wholly in [0,1/2]
        bool lo_right = mpfr_cmp_d(tlo, 0.5) >= 0;  // wholly in [1/2,1]
        mpfr_t outlo, outhi;
        mpfr_init2(outlo, prec);
        mpfr_init2(outhi, prec);
        if (lo_left) {
            sin_pi_point(outlo, tlo, false);
            sin_pi_point(outhi, thi, true);
        } else if (lo_right) {
            sin_pi_point(outlo, thi, false);
            sin_pi_point(outhi, tlo, true);
        } else {
            sin_pi_point(a, tlo, false);
            sin_pi_point(b, thi, false);
            mpfr_min(outlo, a, b, MPFR_RNDD);
            mpfr_set_ui(outhi, 1, MPFR_RNDU);
        }
        Enclosure res;
        mpfr_mul_2ui(res.lo_, outlo, 1, MPFR_RNDD);
        mpfr_mul_2ui(res.hi_, outhi, 1, MPFR_RNDU);
        mpfr_clear(outlo);
        mpfr_clear(outhi);
        mpfr_clear(tlo);
        mpfr_clear(thi);
        mpfr_clear(a);
        mpfr_clear(b);
        return res;
    }

    Enclosure res;
    mpfr_set_zero(res.lo_, 1);
    if (span == 1) {
        // two pieces: [lo - flo, 1] and [0, hi - fhi]
        mpfr_sub_z(tlo, x.lo_raw(), flo.get_mpz_t(), MPFR_RNDD);  // t1
        mpfr_sub_z(thi, x.hi_raw(), fhi.get_mpz_t(), MPFR_RNDU);  // t2
        if (mpfr_sgn(tlo) < 0) mpfr_set_zero(tlo, 1);
        if (mpfr_cmp_ui(thi, 1) > 0) mpfr_set_ui(thi, 1, MPFR_RNDU);
        // sup over piece 1
        if (mpfr_cmp_d(tlo, 0.5) <= 0) {
            mpfr_set_ui(a, 1, MPFR_RNDU);
        } else {
            sin_pi_point(a, tlo, true);
        }
        // sup over piece 2
        if (mpfr_cmp_d(thi, 0.5) >= 0) {
            mpfr_set_ui(b, 1, MPFR_RNDU);
        } else {
            sin_pi_point(b, thi, true);
        }
        mpfr_max(a, a, b, MPFR_RNDU);
        mpfr_mul_2ui(res.hi_, a, 1, MPFR_RNDU);
    } else {
        mpfr_set_ui(res.hi_, 2, MPFR_RNDU);
    }
    mpfr_clear(tlo);
    mpfr_clear(thi);
    mpfr_clear(a);
    mpfr_clear(b);
    return res;
}

Enclosure two_abs_sin_pi(const mpq_class& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    mpq_class r = x - mpq_class(fl);
    if (r == 0) return Enclosure();  // exact zero
    return two_abs_sin_pi(Enclosure(r));
}

Enclosure b_function(const Enclosure& x) {
    if (!x.is_certainly_positive()) throw std::domain_error("b(x) requires x > 0");
    return Enclosure::pi() * x * x.log();
}

}  // namespace sudler
