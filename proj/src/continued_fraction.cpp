#include "sudler/continued_fraction.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace sudler {

size_t ContinuedFraction::digit_count() const {
    return is_periodic() ? std::numeric_limits<size_t>::max() : pre.size();
}

long ContinuedFraction::digit(size_t k) const {
    if (k < 1) throw std::out_of_range("digit index must be >= 1");
    if (k <= pre.size()) return pre[k - 1];
    if (is_periodic()) return period[(k - 1 - pre.size()) % period.size()];
    throw std::out_of_range("index beyond expansion");
}

long ContinuedFraction::max_digit() const {
    long m = 0;
    for (long d : pre) m = std::max(m, d);
    for (long d : period) m = std::max(m, d);
    return m;
}

void ContinuedFraction::normalize() {
    for (long d : pre)
        if (d < 1) throw std::invalid_argument("partial quotients must be >= 1");
    for (long d : period)
        if (d < 1) throw std::invalid_argument("partial quotients must be >= 1");
    // minimal cyclic period
    size_t l = period.size();
    for (size_t len = 1; len < l; ++len) {
        if (l % len != 0) continue;
        bool ok = true;
        for (size_t i = len; i < l && ok; ++i) ok = (period[i] == period[i % len]);
        if (ok) {
            period.resize(len);
            break;
        }
    }
}

ContinuedFraction ContinuedFraction::periodic(std::vector<long> period_digits) {
    ContinuedFraction cf;
    cf.period = std::move(period_digits);
    cf.normalize();
    return cf;
}

ContinuedFraction ContinuedFraction::from_rational(const mpq_class& v) {
    ContinuedFraction cf;
    mpz_class n = v.get_num(), d = v.get_den();
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    cf.a0 = q;
    n = d;
    d = r;
    while (d != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (!q.fits_slong_p()) throw std::overflow_error("partial quotient too large");
        cf.pre.push_back(q.get_si());
        n = d;
        d = r;
    }
    return cf;
}

ContinuedFraction ContinuedFraction::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty continued fraction literal");
    if (s.front() != '[') {
        // plain rational "p/q" or integer
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw std::invalid_argument("cannot parse number: " + text);
        v.canonicalize();
        return from_rational(v);
    }
    if (s.back() != ']') throw std::invalid_argument("missing ']' in CF literal");
    std::string body = s.substr(1, s.size() - 2);
    auto semi = body.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("missing ';' in CF literal");
    ContinuedFraction cf;
    cf.a0 = mpz_class(body.substr(0, semi));
    std::string rest = body.substr(semi + 1);
    bool in_period = false, period_closed = false;
    std::string tok;
    auto flush = [&](bool to_period) {
        if (tok.empty()) return;
        long d = std::stol(tok);
        (to_period ? cf.period : cf.pre).push_back(d);
        tok.clear();
    };
    for (char c : rest) {
        if (c == ',') {
            flush(in_period);
        } else if (c == '(') {
            if (in_period || period_closed)
                throw std::invalid_argument("misplaced '(' in CF literal");
            flush(false);
            in_period = true;
        } else if (c == ')') {
            if (!in_period) throw std::invalid_argument("misplaced ')' in CF literal");
            flush(true);
            in_period = false;
            period_closed = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (period_closed) throw std::invalid_argument("digits after period in CF literal");
            tok.push_back(c);
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c +
                                        "' in CF literal");
        }
    }
    flush(in_period && !period_closed);
    if (in_period) throw std::invalid_argument("unterminated period in CF literal");
    cf.normalize();
    return cf;
}

std::string ContinuedFraction::str() const {
    std::ostringstream os;
    os << "[" << a0.get_str() << ";";
    for (size_t i = 0; i < pre.size(); ++i) {
        if (i) os << ",";
        os << pre[i];
    }
    if (is_periodic()) {
        if (!pre.empty()) os << ",";
        os << "(";
        for (size_t i = 0; i < period.size(); ++i) {
            if (i) os << ",";
            os << period[i];
        }
        os << ")";
    }
    os << "]";
    return os.str();
}

Convergents convergents(const ContinuedFraction& cf, size_t k) {
    if (cf.is_finite() && k > cf.pre.size()) throw std::out_of_range("index beyond expansion");
    Convergents c;
    c.p.resize(k + 1);
    c.q.resize(k + 1);
    c.p[0] = cf.a0;
    c.q[0] = 1;
    if (k >= 1) {
        c.p[1] = cf.digit(1) * cf.a0 + 1;
        c.q[1] = cf.digit(1);
    }
    for (size_t i = 2; i <= k; ++i) {
        mpz_class a = cf.digit(i);
        c.p[i] = a * c.p[i - 1] + c.p[i - 2];
        c.q[i] = a * c.q[i - 1] + c.q[i - 2];
    }
    return c;
}

mpq_class rational_from_cf(const ContinuedFraction& cf) {
    if (!cf.is_finite()) throw std::domain_error("not a finite continued fraction");
    mpq_class v(cf.a0);
    for (auto it = cf.pre.rbegin(); it != cf.pre.rend(); ++it) {
        if (it == cf.pre.rbegin()) {
            v = mpq_class(1, *it);
        } else {
            v = 1 / (mpq_class(*it) + v);
        }
    }
    // v now holds [0;a1..ap]; add a0
    if (cf.pre.empty()) return mpq_class(cf.a0);
    return mpq_class(cf.a0) + v;
}

QuadraticSurd surd_from_periodic_cf(const ContinuedFraction& cf) {
    if (!cf.is_periodic()) throw std::domain_error("continued fraction is not periodic");
    // Fixed point of the period's Moebius map:
    // y = (P1 y + P0) / (Q1 y + Q0) where P,Q are convergents of one period.
    const auto& per = cf.period;
    mpz_class P0 = 1, P1 = per[0], Q0 = 0, Q1 = 1;  // numerator/denominator pair
    // Build the map for [b1, b2, ..., bl]: matrix product of [b 1; 1 0].
    // Start with the first digit already in (P1 = b1) and P0/Q0 seeds.
    for (size_t i = 1; i < per.size(); ++i) {
        mpz_class b = per[i];
        mpz_class Pn = b * P1 + P0, Qn = b * Q1 + Q0;
        P0 = P1;
        P1 = Pn;
        Q0 = Q1;
        Q1 = Qn;
    }
    // y = [b1;b2..bl,y] => y = (P1 y + P0)/(Q1 y + Q0)
    // => Q1 y^2 + (Q0 - P1) y - P0 = 0, take the positive root.
    mpz_class A = Q1, B = Q0 - P1, C = -P0;
    mpz_class D = B * B - 4 * A * C;
    // y = (-B + sqrt(D)) / (2A) > 0
    QuadraticSurd y(-B, 1, D, 2 * A);
    // y is the value of the purely periodic [b1; b2, ..., bl, y] with b1 >= 1;
    // the tail we want is t = [0; b1, b2, ...] = 1/y.
    QuadraticSurd t = y.inverse();
    // Apply the preperiod from the innermost digit outwards.
    for (auto it = cf.pre.rbegin(); it != cf.pre.rend(); ++it) {
        t = (QuadraticSurd(*it) + t).inverse();
    }
    return QuadraticSurd(mpq_class(cf.a0)) + t;
}

QuadraticSurd value_of(const ContinuedFraction& cf) {
    if (cf.is_periodic()) return surd_from_periodic_cf(cf);
    return QuadraticSurd(rational_from_cf(cf));
}

std::vector<mpz_class> cf_from_surd(QuadraticSurd x, size_t n) {
    if (x.is_rational()) throw std::domain_error("finite expansion");
    std::vector<mpz_class> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        mpz_class a = x.floor();
        out.push_back(a);
        x = (x - QuadraticSurd(mpq_class(a))).inverse();
    }
    return out;
}

QuadraticSurd gauss_map(const QuadraticSurd& x) {
    int s = x.sign();
    if (s < 0 || x > QuadraticSurd(1L)) throw std::domain_error("gauss_map domain is [0,1]");
    if (s == 0) return QuadraticSurd();
    return x.inverse().frac();
}

ContinuedFraction forward_tail(const ContinuedFraction& cf, size_t k) {
    if (k < 1) throw std::out_of_range("tail index must be >= 1");
    ContinuedFraction out;
    out.a0 = 0;
    if (k <= cf.pre.size()) {
        out.pre.assign(cf.pre.begin() + (k - 1), cf.pre.end());
        out.period = cf.period;
    } else if (cf.is_periodic()) {
        size_t start = (k - 1 - cf.pre.size()) % cf.period.size();
        out.period.reserve(cf.period.size());
        for (size_t j = 0; j < cf.period.size(); ++j)
            out.period.push_back(cf.period[(start + j) % cf.period.size()]);
    } else if (k == cf.pre.size() + 1) {
        // empty tail of a finite expansion: value 0
    } else {
        throw std::out_of_range("index beyond expansion");
    }
    out.normalize();
    return out;
}

QuadraticSurd delta_exact(const ContinuedFraction& cf, size_t k) {
    if (!cf.is_periodic()) {
        if (k > cf.pre.size()) throw std::out_of_range("index beyond expansion");
        mpq_class alpha = rational_from_cf(cf);
        Convergents c = convergents(cf, k);
        mpq_class v = mpq_class(c.q[k]) * alpha - mpq_class(c.p[k]);
        if (v < 0) v = -v;
        return QuadraticSurd(v);
    }
    QuadraticSurd alpha = surd_from_periodic_cf(cf);
    Convergents c = convergents(cf, k);
    QuadraticSurd v = QuadraticSurd(mpq_class(c.q[k])) * alpha - QuadraticSurd(mpq_class(c.p[k]));
    if (v.sign() < 0) v = -v;
    return v;
}

Enclosure delta(const ContinuedFraction& cf, size_t k) { return delta_exact(cf, k).enclose(); }

std::pair<QuadraticSurd, QuadraticSurd> rotation_surds(const ContinuedFraction& cf, long r) {
    if (!cf.is_purely_periodic())
        throw std::domain_error("rotation surds require a purely periodic continued fraction");
    long l = static_cast<long>(cf.ell());
    if (r < 0 || r >= l) throw std::out_of_range("residue out of range");
    std::vector<long> tau_digits, sigma_digits;
    for (long j = 0; j < l; ++j) {
        tau_digits.push_back(cf.period[(r + j) % l]);
        sigma_digits.push_back(cf.period[((r - 1 - j) % l + l) % l]);
    }
    return {surd_from_periodic_cf(ContinuedFraction::periodic(tau_digits)),
            surd_from_periodic_cf(ContinuedFraction::periodic(sigma_digits))};
}

QuadraticSurd limit_constant(const ContinuedFraction& cf, long r) {
    if (!cf.is_purely_periodic())
        throw std::domain_error("limit constant requires a purely periodic continued fraction");
    long l = static_cast<long>(cf.ell());
    if (r < 0 || r >= l) throw std::out_of_range("residue out of range");
    // forward tail starting at digit a_{r+2}
    std::vector<long> fwd;
    for (long j = 0; j < l; ++j) fwd.push_back(cf.period[(r + 1 + j) % l]);
    QuadraticSurd vec = surd_from_periodic_cf(ContinuedFraction::periodic(fwd));
    QuadraticSurd sigma = rotation_surds(cf, r).second;
    QuadraticSurd denom = QuadraticSurd(cf.period[r % l]) + vec + sigma;
    return denom.inverse();
}

std::vector<long> ostrowski(const ContinuedFraction& cf, const mpz_class& N) {
    if (N < 0) throw std::domain_error("Ostrowski expansion needs N >= 0");
    if (cf.is_finite()) {
        mpq_class v = rational_from_cf(cf);
        if (N >= v.get_den()) throw std::domain_error("N must be smaller than the denominator");
    }
    if (N == 0) return {0};
    // q_k values while q_k <= N
    std::vector<mpz_class> q;
    q.push_back(1);  // q_0
    size_t k = 1;
    while (true) {
        if (cf.is_finite() && k > cf.pre.size()) break;
        mpz_class next = (k == 1) ? mpz_class(cf.digit(1))
                                  : mpz_class(cf.digit(k)) * q[k - 1] + q[k - 2];
        if (next > N) break;
        q.push_back(next);
        ++k;
    }
    std::vector<long> b(q.size(), 0);
    mpz_class rem = N;
    for (size_t i = q.size(); i-- > 0;) {
        mpz_class bi;
        mpz_fdiv_q(bi.get_mpz_t(), rem.get_mpz_t(), q[i].get_mpz_t());
        b[i] = bi.get_si();
        rem -= bi * q[i];
    }
    return b;
}

bool is_admissible(const std::vector<long>& tuple, long r, const ContinuedFraction& cf) {
    if (!cf.is_periodic())
        throw std::domain_error("admissibility is defined relative to a periodic expansion");
    long l = static_cast<long>(cf.ell());
    long p0 = ((r - 1) % l + l) % l;  // digit position of the first tuple element
    for (size_t j = 0; j < tuple.size(); ++j) {
        long cap = cf.period[(p0 + static_cast<long>(j)) % l];
        if (tuple[j] < 0 || tuple[j] > cap) return false;
        if (tuple[j] == cap && j > 0 && tuple[j - 1] != 0) return false;
    }
    return true;
}

}  // namespace sudler
