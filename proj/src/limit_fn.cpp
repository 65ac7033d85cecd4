#include "sudler/limit_fn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sudler/criterion.hpp"

namespace sudler {

namespace {

ContinuedFraction periodic_part(const ContinuedFraction& cf) {
    if (!cf.is_periodic()) throw std::domain_error("limit functions need a periodic expansion");
    if (cf.is_purely_periodic()) return cf;
    return ContinuedFraction::periodic(cf.period);
}

}  // namespace

GEvaluator::GEvaluator(const ContinuedFraction& cf, long r) : cf_(periodic_part(cf)) {
    long l = static_cast<long>(cf_.ell());
    r_ = ((r % l) + l) % l;
    // E(T,a) is monotone in the digit cap a and needs a >= 2; for digit-1
    // expansions the a = 2 bound is still a valid (weaker) majorant.
    aK_ = std::max(2L, cf_.max_digit());
    auto ts = rotation_surds(cf_, r_);
    sigma_ = ts.second;
    C_ = limit_constant(cf_, r_);
    Cenc_ = C_.enclose();
}

Enclosure GEvaluator::g_factor(long n, const Enclosure& eps) const {
    if (n < 1) throw std::domain_error("factor index must be >= 1");
    Enclosure fr = (QuadraticSurd(n) * sigma_).frac().enclose();
    Enclosure en((long)n);
    Enclosure half(mpq_class(1, 2));
    Enclosure A = (Enclosure(1L) - Cenc_ * (fr - half) / en).square();
    return A - (eps + Cenc_ * half).square() / en.square();
}

void GEvaluator::extend(long T) {
    if (T <= cached_) return;
    A_.reserve(T);
    Amid_.reserve(T);
    // Running fractional part {n sigma}: numerator pair (fa + fb sqrt(d))/s
    // updated with integer arithmetic only.
    const mpz_class &sa = sigma_.a(), &sb = sigma_.b(), &d = sigma_.d(), &s = sigma_.s();
    mpz_class cur_a = fa_, cur_b = fb_;
    mpfr_prec_t base = Enclosure::default_precision();
    Enclosure half(mpq_class(1, 2));
    for (long n = cached_ + 1; n <= T; ++n) {
        cur_a += sa;
        cur_b += sb;
        // reduce mod 1: value >= 1  <=>  (cur_a - s) + cur_b sqrt(d) >= 0
        while (true) {
            mpz_class t = cur_a - s;
            bool ge;
            if (t >= 0)
                ge = true;
            else
                ge = (t * t <= cur_b * cur_b * d);
            if (!ge) break;
            cur_a = t;
        }
        // Enclosure of {n sigma} at elevated precision (cancellation margin).
        size_t bits = mpz_sizeinbase(cur_b.get_mpz_t(), 2);
        Enclosure::set_default_precision(base + static_cast<mpfr_prec_t>(bits) + 16);
        Enclosure fr = (Enclosure(cur_a) + Enclosure(cur_b) * Enclosure::sqrt_z(d)) / Enclosure(s);
        Enclosure en((long)n);
        Enclosure t = (Enclosure(1L) - Cenc_ * (fr - half) / en).square();
        // Store at reduced precision: the Lemma-4.2 error terms dominate any
        // 2^-60 storage slop by many orders of magnitude, and 64-bit storage
        // keeps million-term caches affordable.
        Enclosure::set_default_precision(std::min<mpfr_prec_t>(base, 64));
        A_.push_back(t + Enclosure());
        Enclosure::set_default_precision(base);
        Amid_.push_back(A_.back().mid_d());
    }
    fa_ = cur_a;
    fb_ = cur_b;
    cached_ = T;
}

Enclosure GEvaluator::G_truncated(const Enclosure& eps, long T) {
    if (T < 0) throw std::domain_error("T must be >= 0");
    extend(T);
    Enclosure half(mpq_class(1, 2));
    Enclosure B = (eps + Cenc_ * half).square();
    Enclosure prod = Enclosure(2L) * Enclosure::pi() * (eps + Cenc_).abs();
    for (long n = 1; n <= T; ++n) {
        Enclosure en(n);
        Enclosure f = A_[n - 1] - B / en.square();
        prod *= f.abs();
    }
    return prod;
}

double GEvaluator::G_mid(double eps, long T) {
    extend(T);
    double C = Cenc_.mid_d();
    double B = (eps + C / 2.0) * (eps + C / 2.0);
    double prod = 2.0 * 3.14159265358979323846 * std::fabs(eps + C);
    for (long n = 1; n <= T; ++n)
        prod *= std::fabs(Amid_[n - 1] - B / (static_cast<double>(n) * n));
    return prod;
}

Enclosure GEvaluator::G_enclosure(const Enclosure& eps, long T) {
    if (T < 1) throw std::domain_error("T must be >= 1");
    Enclosure E = E_bound(T, aK_);
    Enclosure CE = Cenc_ * E;
    if (!(Enclosure(3L) * CE).certainly_less(mpq_class(1, 2)))
        throw std::runtime_error("T too small");
    Enclosure GT = G_truncated(eps, T);
    Enclosure one(1L);
    Enclosure lo = (one - Enclosure(2L) * CE - Enclosure(5L) / Enclosure(T)) * GT;
    Enclosure hi = GT / (one - Enclosure(3L) * CE);
    return lo.hull(hi);
}

Enclosure GEvaluator::G_adaptive(const Enclosure& eps, double target_width, long T_start,
                                 long T_max) {
    Enclosure last;
    bool have = false;
    for (long T = T_start;; T *= 2) {
        if (T > T_max) T = T_max;
        try {
            last = G_enclosure(eps, T);
            have = true;
            if (last.width() < target_width) return last;
        } catch (const std::runtime_error&) {
            // hypothesis 3 C E < 1/2 not yet certified; grow T
        }
        if (T == T_max) break;
    }
    if (!have) throw std::runtime_error("T too small");
    return last;
}

std::pair<Enclosure, std::optional<Enclosure>> G_bound_on_interval(GEvaluator& ev,
                                                                   const Enclosure& a,
                                                                   const Enclosure& b, long T,
                                                                   bool maximizer_outside) {
    Enclosure ga = ev.G_enclosure(a, T);
    Enclosure gb = ev.G_enclosure(b, T);
    if (!ga.is_certainly_positive() || !gb.is_certainly_positive())
        throw std::runtime_error("zero-freeness not certified");
    Enclosure lower = (ga.lo_d() <= gb.lo_d()) ? ga : gb;
    std::optional<Enclosure> upper;
    if (maximizer_outside) upper = (ga.hi_d() >= gb.hi_d()) ? ga : gb;
    return {lower, upper};
}

namespace {

// -1 certified < 1, +1 certified > 1, 0 undecided at T_max.
int decide_vs_one(GEvaluator& ev, const Enclosure& eps, long T_max, long& T_used,
                  Enclosure& value) {
    for (long T = 1000;; T *= 2) {
        if (T > T_max) T = T_max;
        try {
            value = ev.G_enclosure(eps, T);
            T_used = T;
            if (value.certainly_less(mpq_class(1))) return -1;
            if (value.certainly_greater(mpq_class(1))) return +1;
        } catch (const std::runtime_error&) {
        }
        if (T == T_max) return 0;
    }
}

}  // namespace

TheoremBReport theoremB_check(const ContinuedFraction& cf, long T_max) {
    TheoremBReport rep;
    rep.alpha = cf.str();
    ContinuedFraction per = periodic_part(cf);
    Enclosure zero;
    for (long r = 0; r < static_cast<long>(per.ell()); ++r) {
        GEvaluator ev(per, r);
        TheoremBEntry e;
        e.r = r;
        e.T = 0;
        e.verdict = decide_vs_one(ev, zero, T_max, e.T, e.value);
        if (e.verdict == -1) rep.fires = true;
        if (e.verdict == 0) rep.undecided = true;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

RemarkReport remark_conjectures(long T_max) {
    RemarkReport rep;
    Enclosure zero;
    bool f1 = true, f2 = true;
    for (long a1 = 1; a1 <= 2; ++a1) {
        for (long a2 = 1; a2 <= 9; ++a2) {
            ContinuedFraction cf = ContinuedFraction::periodic({a1, a2});
            GEvaluator ev(cf, 1);
            RemarkCase c;
            c.a1 = a1;
            c.a2 = a2;
            long T_used = 0;
            c.verdict = decide_vs_one(ev, zero, T_max, T_used, c.value);
            if (c.verdict == 0) rep.undecided = true;
            long flip = (a1 == 1) ? 4 : 5;
            bool want_below = (a2 >= flip);
            bool ok = (c.verdict == (want_below ? -1 : +1));
            (a1 == 1 ? f1 : f2) = (a1 == 1 ? f1 : f2) && ok;
            rep.cases.push_back(std::move(c));
        }
    }
    rep.family1_flip_at_4 = f1;
    rep.family2_flip_at_5 = f2;
    return rep;
}

}  // namespace sudler
