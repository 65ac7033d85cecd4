#include "sudler/sudler_eval.hpp"

#include <stdexcept>

namespace sudler {

namespace {

unsigned long to_ulong_count(const mpz_class& N, const char* what) {
    if (N < 0) throw std::domain_error(std::string(what) + " must be non-negative");
    if (!N.fits_ulong_p() || N > 100000000)
        throw std::overflow_error(std::string(what) + " too large for direct evaluation");
    return N.get_ui();
}

}  // namespace

Enclosure sudler(const QuadraticSurd& alpha, const mpz_class& N) {
    unsigned long n = to_ulong_count(N, "N");
    if (alpha.is_rational()) return sudler(alpha.to_rational(), N);
    Enclosure a = alpha.enclose();
    Enclosure prod(1L);
    Enclosure x;  // r * alpha
    for (unsigned long r = 1; r <= n; ++r) {
        x = x + a;
        prod *= two_abs_sin_pi(x);
    }
    return prod;
}

Enclosure sudler(const mpq_class& alpha, const mpz_class& N) {
    unsigned long n = to_ulong_count(N, "N");
    // r*alpha is an integer for some r <= N exactly when N >= den(alpha).
    if (mpz_class(alpha.get_den()) <= N && alpha.get_den() != 1) return Enclosure();
    if (alpha.get_den() == 1) return n >= 1 ? Enclosure() : Enclosure(1L);
    Enclosure prod(1L);
    for (unsigned long r = 1; r <= n; ++r) {
        prod *= two_abs_sin_pi(mpq_class(r) * alpha);
    }
    return prod;
}

Enclosure sudler_perturbed(const ContinuedFraction& cf, size_t n, const Enclosure& eps) {
    Convergents c = convergents(cf, n);
    unsigned long qn = to_ulong_count(c.q[n], "q_n");
    Enclosure a = value_of(cf).enclose();
    Enclosure shift = eps / Enclosure(mpz_class(c.q[n]));
    if (n % 2 == 1) shift = -shift;
    Enclosure prod(1L);
    Enclosure x;
    for (unsigned long r = 1; r <= qn; ++r) {
        x = x + a;
        prod *= two_abs_sin_pi(x + shift);
    }
    return prod;
}

QuadraticSurd epsilon_ik_exact(const ContinuedFraction& cf, const std::vector<long>& digits,
                               size_t i, long k) {
    if (i >= digits.size()) throw std::out_of_range("level index beyond Ostrowski digits");
    size_t n = digits.size() - 1;
    QuadraticSurd sum = QuadraticSurd(k) * delta_exact(cf, i);
    for (size_t j = 1; j <= n - i; ++j) {
        QuadraticSurd term = QuadraticSurd(digits[i + j]) * delta_exact(cf, i + j);
        if (j % 2 == 1)
            sum -= term;
        else
            sum += term;
    }
    Convergents c = convergents(cf, i);
    return QuadraticSurd(mpq_class(c.q[i])) * sum;
}

Enclosure epsilon_ik(const ContinuedFraction& cf, const mpz_class& N, size_t i, long k) {
    return epsilon_ik_exact(cf, ostrowski(cf, N), i, k).enclose();
}

Decomposition decompose(const ContinuedFraction& cf, const mpz_class& N) {
    if (N < 1) throw std::domain_error("decompose needs N >= 1");
    Decomposition d;
    d.digits = ostrowski(cf, N);
    size_t n = d.digits.size() - 1;
    d.product = Enclosure(1L);
    // Flat grouping: P_N = prod_{i: b_i != 0} prod_{c=0}^{b_i-1} P_{q_i}(alpha, eps_{i,c}).
    for (size_t ii = d.digits.size(); ii-- > 0;) {
        for (long c = 0; c < d.digits[ii]; ++c) {
            DecompositionTerm t;
            t.i = ii;
            t.c = c;
            t.epsilon = epsilon_ik_exact(cf, d.digits, ii, c).enclose();
            t.factor = sudler_perturbed(cf, ii, t.epsilon);
            d.product *= t.factor;
            if (ii == n && c == 0) d.top = t.factor;
            d.terms.push_back(std::move(t));
        }
    }
    // Regrouping of Prop. 2.1: P_N = P_{q_n}(alpha, eps_{n,0}) * prod_{i=1}^{n} K_i(N)
    // with K_i(N) = prod_{c=1}^{b_i-1} P_{q_i}(alpha, eps_{i,c})
    //               * P_{q_{i-1}}(alpha, eps_{i-1,0})^{[b_{i-1} != 0]},  b_{-1} := 0.
    auto factor_of = [&](size_t ii, long c) -> const Enclosure& {
        for (const auto& t : d.terms)
            if (t.i == ii && t.c == c) return t.factor;
        throw std::logic_error("missing decomposition term");
    };
    for (size_t ii = 0; ii <= n; ++ii) {
        KFactor kf;
        kf.i = ii;
        kf.value = Enclosure(1L);
        for (long c = 1; c < d.digits[ii]; ++c) kf.value *= factor_of(ii, c);
        // b_{-1} := 0, so K_0 has no carried factor from the level below.
        if (ii >= 1 && d.digits[ii - 1] != 0) kf.value *= factor_of(ii - 1, 0);
        d.kfactors.push_back(std::move(kf));
    }
    if (d.digits[n] == 0) throw std::logic_error("top Ostrowski digit is zero");
    return d;
}

Enclosure H_k(const ContinuedFraction& cf, size_t k, const Enclosure& eps) {
    if (k < 1) throw std::domain_error("H_k needs k >= 1");
    Convergents c = convergents(cf, k);
    unsigned long qk = to_ulong_count(c.q[k], "q_k");
    Enclosure qd = (QuadraticSurd(mpq_class(c.q[k])) * delta_exact(cf, k)).enclose();
    Enclosure pref = (Enclosure(2L) * Enclosure::pi()) * (eps + qd).abs();
    Enclosure half(mpq_class(1, 2));
    Enclosure shift2 = (eps + qd * half).square();
    Enclosure prod(1L);
    mpz_class qz = c.q[k], pz = c.q[k - 1];
    for (unsigned long n = 1; n <= qk / 2; ++n) {
        mpz_class num = (mpz_class(n) * pz) % qz;
        mpq_class fr(num, qz);
        fr.canonicalize();
        Enclosure en((long)n);
        Enclosure h = (Enclosure(1L) - qd * (Enclosure(fr) - half) / en).square() - shift2 / en.square();
        prod *= h.abs();
    }
    return pref * prod;
}

std::vector<VanishingStep> vanishing_subsequence(const ContinuedFraction& cf, double window,
                                                 double c, size_t count, size_t max_q) {
    std::vector<VanishingStep> out;
    if (count == 0) return out;
    mpz_class q_prev = 0;  // q of the previously selected index
    mpz_class N = 0;
    Enclosure alpha_enc = value_of(cf).enclose();
    for (size_t k = 1;; ++k) {
        if (cf.is_finite() && k > cf.pre.size()) break;
        Convergents cv = convergents(cf, k);
        if (cv.q[k] > (long)max_q) break;
        // Condition (c): delta_k < window / (4 q_prev).
        if (q_prev > 0) {
            Enclosure dk = delta(cf, k);
            if (!(dk.hi_d() * 4.0 * q_prev.get_d() < window)) continue;
            if (cv.q[k] < 2 * q_prev) continue;
        }
        // Probe sup of P_{q_k}(alpha, eps) over a grid in (-window, window).
        Enclosure sup;
        bool first = true;
        for (int t = -2; t <= 2; ++t) {
            Enclosure e = Enclosure(window / 2.0) * Enclosure((long)t);
            Enclosure v = sudler_perturbed(cf, k, e);
            sup = first ? v : sup.hull(v);
            first = false;
        }
        if (!(sup.hi_d() < c)) continue;
        VanishingStep st;
        st.k = k;
        st.q = cv.q[k];
        N += cv.q[k];
        st.N = N;
        st.sup_P = sup;
        st.P_of_N = cf.is_periodic() ? sudler(value_of(cf), N)
                                     : sudler(rational_from_cf(cf), N);
        q_prev = cv.q[k];
        out.push_back(std::move(st));
        if (out.size() == count) return out;
    }
    if (out.empty()) throw std::runtime_error("no qualifying indices");
    return out;
}

}  // namespace sudler
