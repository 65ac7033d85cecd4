#pragma once
// Theorem-1 machinery: the exact majorant g(l,x,y), F(T,x,y), the interval
// functions b(x) = pi x log x and E(T,a), Pinner's bound, the exclusion
// windows of Prop. 3.5, and the grid verification campaigns.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sudler/continued_fraction.hpp"
#include "sudler/enclosure.hpp"

namespace sudler {

// g(l,x,y) = sum_{n<=l} (1/2 - {nx} * [floor(nx) = floor(ny)]), exact.
mpq_class g_majorant(long l, const mpq_class& x, const mpq_class& y);

// F(T,x,y) = sum_{l<=T} g(l,x,y) / (l(l+1)), exact (incremental g).
mpq_class F_exact(long T, const mpq_class& x, const mpq_class& y);

// E(T,a) = (1+log T)/T * (a/(8 log a) + 6) + (a/8 + 23/4)/T.
Enclosure E_bound(long T, long a);

// Pinner: |sum_{n<=l} (1/2 - {n alpha})| <= (a/(8 log a) + 6) log l + a/8 + 23/4.
Enclosure pinner_bound(long l, long a);

struct Window {
    mpq_class lo, hi;
};

// Prop. 3.5 exclusion windows for B(a,M), m = 1..m_max (clipped to [0,1]).
std::vector<Window> excluded_windows(long a, long m_max);

struct CriterionParams {
    long a_K;                  // constant inside E(T, a_K)
    long a_next;               // a_{k+1} on the right-hand side
    ContinuedFraction tail;    // the surd [0;(a,1)] on the right-hand side
    long T;
    long R;
};

struct GridReport {
    std::string name;
    long T = 0, R = 0;
    long i_lo = 0, i_hi = 0;
    long cells_total = 0;
    long cells_excluded = 0;
    long cells_verified = 0;
    long cells_undecided = 0;
    double min_margin = 0.0;        // min over verified cells of rhs - lhs
    std::vector<long> bad_cells;    // undecided cells (capped at 32)
    double seconds = 0.0;
    bool pass() const { return cells_undecided == 0 && cells_total > 0; }
};

// Certify F(T, i/R, (i+1)/R) + E(T, a_K) < b((a_next + tail + i/R)/(2 pi))
// for every cell i in [i_lo, i_hi] not wholly inside an exclusion window.
// stride > 1 subsamples the cells (every stride-th one); the per-cell
// arithmetic is unchanged, so a subsampled run is a faithful but
// non-certifying preview of the full sweep.
// One-sided certified rounding throughout: a cell is either verified or
// undecided, never falsely verified.
GridReport verify_grid(const CriterionParams& p, long i_lo, long i_hi,
                       const std::vector<Window>& exclusions,
                       const std::string& name = "", long stride = 1);

// Reference (slow, fully exact/interval) evaluation of one cell; used to
// cross-check the fixed-point fast path.  Returns +1 verified / 0 undecided.
int verify_cell_reference(const CriterionParams& p, long i);

// Eq. (case_large_ak): log(T+1)/a + 2 E(T,a)/a < log(a/(2 pi)), certified at
// (T, a) = (50, 18); monotonicity spot checks at larger a included.
bool analytic_large_aK_check(long T, long a_K);

struct Theorem1Report {
    bool analytic_pass = false;
    std::vector<GridReport> grids;  // 9-18, a_K=8, a_K=7 main, a_K=7 fallback
    long scale = 1;
    bool certifying = false;
    double seconds = 0.0;
    bool pass() const {
        if (!analytic_pass) return false;
        for (const auto& g : grids)
            if (!g.pass()) return false;
        return true;
    }
};

// Runs all Theorem-1 campaigns.  scale > 1 divides T and R for smoke runs
// (report marked non-certifying).  only_case restricts to one campaign:
// "" (all), ">=18", "9-18", "8", "7".  Skipped campaigns do not affect pass().
Theorem1Report verify_theorem1(long scale = 1, const std::string& only_case = "");

struct FigurePoint {
    mpq_class x;
    mpq_class F;
};

// Exact F profile over the unit grid (Figure 1 data): x_i = i/R, y = x + 1/R.
std::vector<FigurePoint> figure1(long T, long R);

}  // namespace sudler
