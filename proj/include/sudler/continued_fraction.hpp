#pragma once
// Continued fractions: finite (rational), eventually periodic (quadratic
// irrational), convergents, Ostrowski expansion, and the period-rotation
// constants alpha_sigma_r, alpha_tau_r and C(r).
//
// Index conventions (all 1-based in digit index, matching the paper):
//   digit(k)   = a_k for k >= 1
//   tau_r      = [0; period starting at a_{r+1}]                  (0 <= r < l)
//   sigma_r    = [0; a_r, a_{r-1}, ..., a_1, a_l, ..., a_{r+1}]   (descending
//                start at a_r, indices mod l), the limit of q_{ml+r-1}/q_{ml+r}
//   C(r)       = 1 / (a_{r+1} + tau_{[r+1]} + sigma_r), the limit of
//                q_{ml+r} delta_{ml+r}.  (tau_{[r+1]} is the forward tail
//                starting at digit a_{r+2}.)

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "sudler/enclosure.hpp"
#include "sudler/surd.hpp"

namespace sudler {

struct ContinuedFraction {
    mpz_class a0 = 0;
    std::vector<long> pre;     // preperiod digits a_1 .. a_p (all >= 1)
    std::vector<long> period;  // periodic digits; empty => finite expansion

    bool is_periodic() const { return !period.empty(); }
    bool is_finite() const { return period.empty(); }
    // purely periodic: a0 = 0, no preperiod
    bool is_purely_periodic() const { return is_periodic() && pre.empty() && a0 == 0; }
    size_t ell() const { return period.size(); }
    // Number of available digits; SIZE_MAX-like large value for periodic.
    size_t digit_count() const;
    long digit(size_t k) const;  // a_k, k >= 1
    long max_digit() const;      // max over all digits (a_K for periodic tails)

    // Parse "[a0;a1,...,ap,(b1,...,bl)]" or a plain rational "p/q" / "n".
    static ContinuedFraction parse(const std::string& text);
    static ContinuedFraction from_rational(const mpq_class& v);
    static ContinuedFraction periodic(std::vector<long> period_digits);
    std::string str() const;

    // Reduce the period to its minimal cyclic period; called by parse/periodic.
    void normalize();
};

struct Convergents {
    std::vector<mpz_class> p, q;  // index 0..k
};

// convergents up to index k (inclusive); errors if the expansion is shorter.
Convergents convergents(const ContinuedFraction& cf, size_t k);

// Exact surd value of an eventually periodic continued fraction.
QuadraticSurd surd_from_periodic_cf(const ContinuedFraction& cf);
// Value of the rational (finite) expansion.
mpq_class rational_from_cf(const ContinuedFraction& cf);
// Value as a surd for either kind.
QuadraticSurd value_of(const ContinuedFraction& cf);

// First n partial quotients (a_0, a_1, ..., a_{n-1}) of an irrational surd.
std::vector<mpz_class> cf_from_surd(QuadraticSurd x, size_t n);

// Gauss map T(x) = {1/x}, T(0) = 0; requires 0 <= x <= 1.
QuadraticSurd gauss_map(const QuadraticSurd& x);

// The continued fraction of the tail [0; a_{k}, a_{k+1}, ...] (1-based k).
ContinuedFraction forward_tail(const ContinuedFraction& cf, size_t k);

// delta_k = ||q_k alpha||, exact for periodic cf (surd), enclosure otherwise.
QuadraticSurd delta_exact(const ContinuedFraction& cf, size_t k);
Enclosure delta(const ContinuedFraction& cf, size_t k);

// (alpha_tau_r, alpha_sigma_r) for purely periodic cf, 0 <= r < l.
std::pair<QuadraticSurd, QuadraticSurd> rotation_surds(const ContinuedFraction& cf, long r);
// C(r) as an exact surd.
QuadraticSurd limit_constant(const ContinuedFraction& cf, long r);

// Ostrowski digits (b_0, ..., b_n) of N relative to cf (greedy, legal).
std::vector<long> ostrowski(const ContinuedFraction& cf, const mpz_class& N);

// A tuple is admissible w.r.t. residue r when it can appear as
// (b_{i-1}, b_i, ...) in some legal Ostrowski expansion with [i] = r,
// i.e. the first tuple element sits at a digit position == r-1 (mod l).
bool is_admissible(const std::vector<long>& tuple, long r, const ContinuedFraction& cf);

}  // namespace sudler
