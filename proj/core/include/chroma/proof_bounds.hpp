#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chroma/big_count.hpp"
#include "chroma/chromatic.hpp"
#include "chroma/graph.hpp"
#include "chroma/overprediction.hpp"

namespace chroma {

// ---------------------------------------------------------------------------
// Linear program over a_j >= 0:
//   sum a_j = x,  sum j a_j = k-1,  sum j^2 a_j <= S;  maximise sum a_j / (j+1).

struct LPInstance {
    int x = 4;
    int k = 4;
    double S = 3.0;

    /// Throws std::invalid_argument unless x >= k >= 4 and k-1 <= S <= 3k-3.
    static LPInstance make(int x, int k, double S);
};

/// Piecewise optimum with breakpoint S = 2k-2.
double lp_closed_form(const LPInstance& inst);

/// Objective at the basic solution supported on {0, j0, j1}.
double lp_pair_value(const LPInstance& inst, int j0, int j1);

struct LPSolution {
    double value = 0.0;
    int j0 = 0;
    int j1 = 0;
    double a0 = 0.0;
    double a_j0 = 0.0;
    double a_j1 = 0.0;
    /// Every admissible pair within 1e-12 of the optimum.
    std::vector<std::pair<int, int>> argmax;
};

/// Enumerates basic solutions over pairs 0 < j0 < j1 <= jmax with
/// j0 <= S/(k-1) <= j1. The reported (j0, j1) is the tied pair with the
/// smallest j1, then the largest j0. Throws std::logic_error if a solved
/// triple is negative.
LPSolution lp_brute_force(const LPInstance& inst, int jmax = 12);

// ---------------------------------------------------------------------------
// Bound-chain arithmetic.

/// (k!)^(1/k).
double radiant_T_bound(int k);

/// (k-1) + n(k-2)/(n-k); requires n > k.
double s_for(int n, int k);

/// Per-vertex base of the large-n bound; requires n >= 2k-1.
double large_order_rhs(int n, int k);

struct SweepViolation {
    int k = 0;
    int n = 0;
    double value = 0.0;
    double limit = 0.0;
};

struct SweepReport {
    std::string name;
    std::uint64_t checks = 0;
    std::vector<SweepViolation> violations;

    bool passed() const { return violations.empty(); }
};

/// large_order_rhs(n, k) < k-1 for kmin <= k <= kmax and 2k-1 <= n <= max(k^2-k, 4k),
/// plus the n -> infinity limit (k+1)/2 + (k-2)/6 < k-1.
SweepReport sweep_large_order(int kmax, int kmin = 5);

/// n^2 + (1-3k)n + 2k^2 - k + 1 <= 0 for 4 <= k <= kmax and k+1 <= n <= 2k-2.
SweepReport sweep_edge_count(int kmax);

// ---------------------------------------------------------------------------
// Exact k = 4 refinement.

enum class K4Class { S1 = 1, S2 = 2, S3 = 3 };

/// Number of distinct colors in a starred profile (4 entries summing to 3).
K4Class k4_class_of(const ColorProfile& starred);
double k4_tstar(K4Class cls);
/// Representative profile for a class: (3,0,0,0), (2,1,0,0), (1,1,1,0).
ColorProfile k4_representative(K4Class cls);

struct K4Split {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
};

double k4_objective(const K4Split& s);

/// Maximises k4_objective subject to s1+s2+s3 = n-4, 3 s1 + s2 <= pair_budget,
/// s >= 0, by enumerating the vertices of the feasible polygon. Requires n >= 4.
K4Split k4_s_lp(int n, double pair_budget);
inline K4Split k4_s_lp(int n) { return k4_s_lp(n, static_cast<double>(n)); }

/// 4! * 3^((2n-3)/6) * 2^((11n-54)/12); requires n >= 6.
double k4_final_bound(int n);
double k4_final_log_bound(int n);
/// k4_final_bound(n) < 4! * 3^(n-4), compared in log space.
bool k4_final_below_tomescu(int n);

/// For nmin <= n <= nmax, flags every n where the comparison disagrees with
/// "strict iff n >= 8".
SweepReport sweep_k4_final(int nmin, int nmax);

/// lp_closed_form == lp_brute_force on `points` evenly spaced S values in
/// [k-1, 3k-3] for k in [kmin, kmax], x in {k, k+3}, plus the argmax pairs.
SweepReport sweep_lp_equivalence(int kmin, int kmax, int points = 200, int jmax = 12, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Per-graph bound chain.

struct BoundStage {
    std::string name;
    double value = 0.0;
    /// Provably >= P_G(k) for every graph; hypothetical stages only hold for
    /// minimal counterexamples.
    bool certified = false;
};

/// Statistics over uniform (coloring, non-radiant vertex) pairs using N*(v).
struct StarStatistics {
    std::vector<double> a;        ///< a[j] = E*[#colors i with c*_i(v) = j], j = 0..k-1
    double S = 0.0;               ///< sum_j j^2 a_j
    double pair_statistic = 0.0;  ///< E*[sum_i C(c*_i(v), 2)]
    double w_star_mean = 0.0;     ///< E*[W*(c, v)]
    std::optional<std::array<double, 3>> k4_s;  ///< E_c|S_j| when k = 4
};

struct BoundChainOptions {
    int pi_samples = 4;
    std::uint64_t seed = 0;
    std::uint64_t guard = kDefaultEnumerationGuard;
    StarRule star_rule = StarRule::LowestIndex;
};

struct BoundChainReport {
    std::string id;
    int n = 0;
    int k = 0;
    BigCount exact;
    std::vector<BoundStage> stages;
    BigCount tomescu_rhs;
    bool equality_case = false;
    bool core_is_clique = false;
    /// exp(k log radiant_T_bound(k)) = k!, the radiant contribution.
    double radiant_factor = 0.0;
    /// Present when every vertex has at least k-1 neighbours.
    std::optional<StarStatistics> star;
    std::vector<std::vector<VertexId>> sampled_orderings;
};

/// Stages, in order: overprediction[i] per sampled ordering, global_T,
/// radiant_split (certified); w_star_lp (when n >= 2k-1) and k4_table (k = 4,
/// n >= 6) are hypothetical. Throws std::invalid_argument if chi(G) != k.
BoundChainReport bound_chain(const Graph& g, int k, const BoundChainOptions& options = {}, std::string id = {});

}  // namespace chroma
