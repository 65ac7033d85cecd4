#pragma once
// Theorems 2 and 3: limiting perturbations eps'_{r,k}, their closed forms for
// head digits, the perturbation windows [L_r, U_r], the lower-approximation
// functions Pi_r built from endpoint evaluations of G_r, the admissible-tuple
// case analyses for [0;(5,4)] and [0;(6,5,5)], and the Theorem-2 demonstrator
// for [0;(6,5)].

#include <map>
#include <string>
#include <vector>

#include "sudler/continued_fraction.hpp"
#include "sudler/enclosure.hpp"
#include "sudler/limit_fn.hpp"
#include "sudler/surd.hpp"

namespace sudler {

struct TailCoefficients {
    long r = 0;
    QuadraticSurd alpha_pi;       // prod over the period of alpha_sigma
    std::vector<QuadraticSurd> c; // c[0] = C(r); c[j] = C([r+j]) prod_{n<=j} sigma_{[r+n]}
    QuadraticSurd L, U;           // perturbation window (ell = 2 or 3)
};

TailCoefficients tail_coefficients(const ContinuedFraction& cf, long r);

// (L_r, U_r): certified bounds of eps'_{r,k}(tail) - eps'_{r,k}(head) over all
// admissible tails; ell = 2 and ell = 3 only.
std::pair<QuadraticSurd, QuadraticSurd> perturbation_window(const ContinuedFraction& cf, long r);

// eps'_{r,k} of a truncated tail (digits beta_{r+1}, beta_{r+2}, ...), summed
// exactly up to J terms with a certified geometric bound for the remainder.
Enclosure eps_prime(const ContinuedFraction& cf, long r, long k, const std::vector<long>& tail,
                    long J);

// Exact eps'_{r,k} for a fully periodic tail with period length == ell,
// beta_{r+j} = tail_period[(j-1) mod ell]  (geometric series closed form).
QuadraticSurd eps_prime_periodic_exact(const ContinuedFraction& cf, long r, long k,
                                       const std::vector<long>& tail_period);

// Closed form eps'_{r,k}(head) = k c_{r,0} + sum_j (-1)^j head[j-1] c_{r,j},
// head has ell entries: (a,b) for ell = 2 and (a,b,c) for ell = 3.
QuadraticSurd eps_prime_closed_exact(const ContinuedFraction& cf, long r, long k,
                                     const std::vector<long>& head);
Enclosure eps_prime_closed(const ContinuedFraction& cf, long r, long k,
                           const std::vector<long>& head);

// Shared evaluation context: G evaluators per residue, memoized G-tilde and
// Pi lower bounds at the current truncation length.
class PiContext {
public:
    explicit PiContext(const ContinuedFraction& cf);

    long ell() const { return ell_; }
    const ContinuedFraction& cf() const { return cf_; }
    GEvaluator& evaluator(long r) { return evals_[index(r)]; }
    const TailCoefficients& coefficients(long r) const { return coeffs_[index(r)]; }

    // min of the endpoint enclosures of G_r over [eps'+L_r, eps'+U_r];
    // throws when zero-freeness fails at this T.
    Enclosure G_tilde(long r, long k, const std::vector<long>& head, long T);

    // Pi_r(tuple): tuple has ell+2 entries (a,b,c,d) / (a,b,c,d,e); the empty
    // product case (a,b) = (0,0) returns the exact point enclosure [1,1].
    Enclosure Pi_lower(long r, const std::vector<long>& tuple, long T);

private:
    size_t index(long r) const { return static_cast<size_t>(((r % ell_) + ell_) % ell_); }
    ContinuedFraction cf_;
    long ell_;
    std::vector<GEvaluator> evals_;
    std::vector<TailCoefficients> coeffs_;
    // memo tables, cleared whenever the truncation length changes
    std::map<std::pair<long, std::vector<long>>, Enclosure> gt_cache_;  // (r*16+k, head)
    std::map<std::pair<long, std::vector<long>>, Enclosure> pi_cache_;  // (r, normalized tuple)
    long cache_T_ = 0;
};

struct PropertyResult {
    std::string name;
    double threshold = 0.0;
    long checked = 0;
    long undecided = 0;
    long violations = 0;
    // Tuples whose Pi is the structurally empty product: they contribute the
    // exact factor 1 and are verified as such, but are excluded from the
    // strict ">" minimum (the proof needs no slack from them).
    long exact_ones = 0;
    double min_lower = 0.0;  // min over checked tuples of the certified lower bound
    std::vector<std::vector<long>> witnesses;  // offending tuples (capped)
    bool pass() const { return checked > 0 && undecided == 0 && violations == 0; }
};

struct LemmaReport {
    std::string alpha;
    std::vector<PropertyResult> properties;
    long T_final = 0;
    double seconds = 0.0;
    bool pass() const {
        for (const auto& p : properties)
            if (!p.pass()) return false;
        return !properties.empty();
    }
};

// Lemma 5.2 (i)-(v) for [0;(5,4)] plus the Corollary-5.3 case analysis.
LemmaReport verify_lemma_54(long T_start = 1000, long T_max = 1000000);

// Lemma 5.4 (i)-(vi) for [0;(6,5,5)] plus the Corollary-5.5 case analysis and
// the Lemma-5.6 M_i grouping bookkeeping on sampled N.
LemmaReport verify_lemma_655(long T_start = 1000, long T_max = 1000000);

struct Theorem2Pair {
    long i2 = 0;  // the even index 2i of the pair (2i, 2i-1)
    Enclosure value;
    bool below = false;
};

struct Theorem2Report {
    Enclosure eps00, eps10;   // limiting eps'_{0,0}, eps'_{1,0} (exact surds enclosed)
    Enclosure limiting_pair;  // G_0(eps'_{0,0}) * G_1(eps'_{1,0})
    bool limiting_below_0997 = false;
    std::vector<Theorem2Pair> g_pairs;  // G pairs at exact eps_{i,0}(N_n), mid-range i
    std::vector<Theorem2Pair> p_pairs;  // direct P_{q_i} pairs at small i
    std::vector<double> log_surrogate;  // n -> sum of log G_{[i]}(eps_{i,0}(N_n))
    long surrogate_n_lo = 0;
    bool surrogate_decreasing = false;
    bool byproduct_41_fires = false;  // Theorem B fires for [0;(4,1)]
    double seconds = 0.0;
    bool pass() const;
};

// Theorem-2 demonstrator for [0;(6,5)] with N_n = sum_{i=0}^{2n} q_i.
Theorem2Report theorem2_demo(long n = 40);

struct EpsConvergenceReport {
    double delta = 0.0;
    long n = 0;
    long I0 = -1, J0 = -1;       // minimal window margins found (-1: none works)
    bool found = false;
    std::vector<double> deviations;  // |eps_{i,k}(N_n) - eps'_{[i],k}| upper bounds
};

// Prop. 4.4 scan: deviations of eps_{i,k}(N_n) from the limiting eps' for a
// periodic digit stream (period length == ell of cf).
EpsConvergenceReport eps_convergence_test(const ContinuedFraction& cf,
                                          const std::vector<long>& tail_period, long k,
                                          double delta, long n = 60);

}  // namespace sudler
