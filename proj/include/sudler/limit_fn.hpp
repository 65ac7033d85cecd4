#pragma once
// Certified enclosures of the limit functions G_r(alpha, eps) by truncation:
//   G_r(alpha,eps) = 2 pi |eps + C(r)| prod_{n>=1} |g_n|,
//   g_n = (1 - C(r)({n alpha_sigma_r} - 1/2)/n)^2 - (eps + C(r)/2)^2 / n^2,
// with the truncation error bounds
//   (1 - 2 C(r) E(T,a_K) - 5/T) G_{r,T} <= G_r <= G_{r,T} / (1 - 3 C(r) E(T,a_K)).
// The product runs over the fractional parts of the *backward* tail
// alpha_sigma_r (the paper's statement of the product prints alpha_tau_r but
// its own truncated form and all numerical values use the reversed period).

#include <optional>
#include <string>
#include <vector>

#include "sudler/continued_fraction.hpp"
#include "sudler/enclosure.hpp"
#include "sudler/surd.hpp"

namespace sudler {

// Evaluator for one (alpha, r); caches the eps-independent factor parts
//   A_n = (1 - C(r)({n alpha_sigma_r} - 1/2)/n)^2
// so repeated evaluations at different eps cost one subtraction per n.
class GEvaluator {
public:
    GEvaluator(const ContinuedFraction& cf, long r);

    long residue() const { return r_; }
    long a_K() const { return aK_; }
    const QuadraticSurd& C() const { return C_; }
    const QuadraticSurd& sigma() const { return sigma_; }

    // One factor g_n (for tests and the Lemma-4.2 positivity property).
    Enclosure g_factor(long n, const Enclosure& eps) const;

    // G_{r,T}(eps) = 2 pi |eps + C(r)| prod_{n<=T} |g_n|.
    Enclosure G_truncated(const Enclosure& eps, long T);

    // Certified enclosure of G_r(eps) via the Lemma-4.2 bounds; throws
    // "T too small" when 3 C(r) E(T,a_K) >= 1/2 cannot be certified.
    Enclosure G_enclosure(const Enclosure& eps, long T);

    // Doubles T from T_start until the enclosure width drops below
    // target_width or T exceeds T_max; returns the last enclosure.
    Enclosure G_adaptive(const Enclosure& eps, double target_width,
                         long T_start = 1000, long T_max = 1000000);

    // Fast non-certified midpoint evaluation of G_{r,T} (for empirical
    // reports and plot data only).
    double G_mid(double eps, long T);

private:
    void extend(long T);
    ContinuedFraction cf_;
    long r_, aK_;
    QuadraticSurd C_, sigma_;
    Enclosure Cenc_;
    mpz_class fa_{0}, fb_{0};       // running {n sigma} numerator over sigma.s()
    long cached_ = 0;
    std::vector<Enclosure> A_;   // A_[n-1], stored at reduced precision
    std::vector<double> Amid_;   // midpoints of A_ for the fast path
};

// Lemma 4.2(i): on a zero-free interval, min of the endpoint enclosures is a
// lower bound for G on [a,b]; the max is an upper bound only when the caller
// asserts the maximizer lies outside [a,b].
std::pair<Enclosure, std::optional<Enclosure>> G_bound_on_interval(
    GEvaluator& ev, const Enclosure& a, const Enclosure& b, long T,
    bool maximizer_outside = false);

struct TheoremBEntry {
    long r;
    long T;
    Enclosure value;  // enclosure of G_r(alpha, 0)
    int verdict;      // -1 certified < 1, +1 certified > 1, 0 undecided
};

struct TheoremBReport {
    std::string alpha;
    std::vector<TheoremBEntry> entries;
    bool fires = false;      // some G_r(alpha,0) certified < 1
    bool undecided = false;  // some entry neither side of 1
};

TheoremBReport theoremB_check(const ContinuedFraction& cf, long T_max = 1000000);

struct RemarkCase {
    long a1, a2;
    Enclosure value;  // G_1([0;(a1,a2)], 0)
    int verdict;      // as above
};

struct RemarkReport {
    std::vector<RemarkCase> cases;
    bool family1_flip_at_4 = false;  // [0;(1,a2)]: G_1 < 1 iff a2 >= 4
    bool family2_flip_at_5 = false;  // [0;(2,a2)]: G_1 < 1 iff a2 >= 5
    bool undecided = false;
};

RemarkReport remark_conjectures(long T_max = 1000000);

}  // namespace sudler
