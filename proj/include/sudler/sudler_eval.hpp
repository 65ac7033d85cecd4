#pragma once
// Direct and decomposed evaluation of Sudler products:
//   P_N(alpha)            = prod_{r=1..N} 2|sin(pi r alpha)|
//   P_{q_n}(alpha, eps)   = prod_{r=1..q_n} 2|sin(pi (r alpha + (-1)^n eps/q_n))|
// the perturbations eps_{i,k}(N), the K_i(N) regrouping of Prop. 2.1, the
// H_k surrogate product, and the vanishing-subsequence demonstrator.

#include <gmpxx.h>

#include <vector>

#include "sudler/continued_fraction.hpp"
#include "sudler/enclosure.hpp"
#include "sudler/surd.hpp"

namespace sudler {

// P_N(alpha).  The rational overload detects exact zeros (r*alpha integer).
Enclosure sudler(const QuadraticSurd& alpha, const mpz_class& N);
Enclosure sudler(const mpq_class& alpha, const mpz_class& N);

// P_{q_n}(alpha, eps) with the (-1)^n sign convention.
Enclosure sudler_perturbed(const ContinuedFraction& cf, size_t n, const Enclosure& eps);

// eps_{i,k}(N) = q_i (k delta_i + sum_{j=1}^{n-i} (-1)^j b_{i+j} delta_{i+j}),
// where (b_0..b_n) are the Ostrowski digits of N.  Exact surd for periodic cf.
QuadraticSurd epsilon_ik_exact(const ContinuedFraction& cf, const std::vector<long>& digits,
                               size_t i, long k);
Enclosure epsilon_ik(const ContinuedFraction& cf, const mpz_class& N, size_t i, long k);

struct DecompositionTerm {
    size_t i;           // level (uses q_i)
    long c;             // repetition index, 0 <= c < b_i
    Enclosure epsilon;  // eps_{i,c}(N)
    Enclosure factor;   // P_{q_i}(alpha, eps_{i,c}(N))
};

struct KFactor {
    size_t i;
    Enclosure value;  // K_i(N), Prop. 2.1 with b_{-1} := 0
};

struct Decomposition {
    std::vector<long> digits;              // Ostrowski digits of N
    std::vector<DecompositionTerm> terms;  // flat grouping (shifted_prod_1)
    std::vector<KFactor> kfactors;         // regrouping (shifted_prod_2)
    Enclosure top;                         // P_{q_n}(alpha, eps_{n,0})
    Enclosure product;                     // product of all flat terms
};

// Both groupings of Prop. 2.1; product equals sudler(alpha, N) within widths.
Decomposition decompose(const ContinuedFraction& cf, const mpz_class& N);

// H_k(alpha, eps) = 2 pi |eps + q_k delta_k| prod_{n=1..floor(q_k/2)} h_{n,k}
// with h_{n,k} = |(1 - q_k delta_k ({n q_{k-1}/q_k} - 1/2)/n)^2
//                 - (eps + q_k delta_k / 2)^2 / n^2|.
Enclosure H_k(const ContinuedFraction& cf, size_t k, const Enclosure& eps);

struct VanishingStep {
    size_t k;          // selected index k_j
    mpz_class q;       // q_{k_j}
    mpz_class N;       // partial sum N_j = sum_{i<=j} q_{k_i}
    Enclosure sup_P;   // empirical sup of P_{q_k}(alpha, eps) over the probe grid
    Enclosure P_of_N;  // P_{N_j}(alpha)
};

// Lemma 3.1 demonstrator: select indices with sup_{|eps|<delta} P_{q_k} < c
// (probed on an eps grid, reported as empirical), q_{k_j} >= 2 q_{k_{j-1}} and
// delta_{k_j} < delta/(4 q_{k_{j-1}}); returns the partial sums N_j.
std::vector<VanishingStep> vanishing_subsequence(const ContinuedFraction& cf, double window,
                                                 double c, size_t count,
                                                 size_t max_q = 300000);

}  // namespace sudler
