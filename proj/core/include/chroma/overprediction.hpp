#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "chroma/big_count.hpp"
#include "chroma/chromatic.hpp"
#include "chroma/graph.hpp"

namespace chroma {

using Rng = std::mt19937_64;

/// Linear order of the vertices: perm[i] is the vertex at position i.
class Ordering {
public:
    explicit Ordering(std::vector<VertexId> perm);
    static Ordering identity(int n);
    static Ordering random(int n, Rng& rng);

    int size() const { return static_cast<int>(perm_.size()); }
    VertexId at(int position) const { return perm_[static_cast<std::size_t>(position)]; }
    int position(VertexId v) const { return pos_[static_cast<std::size_t>(v)]; }
    const std::vector<VertexId>& perm() const { return perm_; }
    /// Vertices strictly before v.
    VertexMask before(VertexId v) const { return before_[static_cast<std::size_t>(v)]; }
    /// N^-(v): neighbours of v that precede it.
    VertexMask back_neighbors(const Graph& g, VertexId v) const { return g.neighbors(v) & before(v); }

    friend bool operator==(const Ordering& a, const Ordering& b) { return a.perm_ == b.perm_; }

private:
    std::vector<VertexId> perm_;
    std::vector<int> pos_;
    std::vector<VertexMask> before_;
};

/// Proper coloring of a prefix of an ordering. colors[v] is -1 off the prefix.
struct PartialColoring {
    Ordering ordering;
    int assigned = 0;
    std::vector<int> colors;

    bool is_colored(VertexId v) const { return ordering.position(v) < assigned; }
};

/// Colors of [k] absent from the colored part of N^-(v). `colors[u] < 0` means uncolored.
int x_pi(const Graph& g, int k, const Ordering& pi, std::span<const int> colors, VertexId v);
inline int x_pi(const Graph& g, int k, const Ordering& pi, const Coloring& c, VertexId v) {
    return x_pi(g, k, pi, c.colors, v);
}
inline int x_pi(const Graph& g, int k, const PartialColoring& c, VertexId v) {
    return x_pi(g, k, c.ordering, c.colors, v);
}

/// Product of x_pi over every vertex of a total coloring.
BigCount x_pi_product(const Graph& g, int k, const Ordering& pi, const Coloring& c);
double log_x_pi_product(const Graph& g, int k, const Ordering& pi, const Coloring& c);

/// E_c[log X_pi(c)] over all k-colorings (natural log). Throws std::domain_error
/// when G has no k-coloring and GuardExceeded above the enumeration guard.
double overprediction_log_bound_exact(const Graph& g, int k, const Ordering& pi,
                                      std::uint64_t guard = kDefaultEnumerationGuard);
/// exp of the above; never below P_G(k).
double overprediction_bound_exact(const Graph& g, int k, const Ordering& pi,
                                  std::uint64_t guard = kDefaultEnumerationGuard);

struct GreedySample {
    PartialColoring coloring;
    BigCount weight;   ///< product of the choice counts met along the way
    bool complete = false;
};

/// One run of the greedy process: color vertices in order, each uniformly among
/// its available colors, stopping at the first vertex with none.
GreedySample greedy_precoloring_sample(const Graph& g, int k, const Ordering& pi, Rng& rng);

enum class OrderingMode { Fixed, FreshRandom };

struct SisOptions {
    std::uint64_t samples = 1000;
    OrderingMode mode = OrderingMode::Fixed;
    /// Used in Fixed mode; identity when unset.
    std::optional<Ordering> ordering;
    std::uint64_t seed = 0;
    int jobs = 1;
};

struct SisEstimate {
    double mean = 0.0;
    /// Sample standard deviation over sqrt(samples); 0 when samples == 1.
    double stderr_ = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t completed = 0;
    BigInt weight_sum = 0;
    BigInt weight_square_sum = 0;
};

/// Sequential importance sampling estimate of P_G(k): the mean of
/// weight * [run complete]. Samples are split into fixed-size blocks whose
/// generators are derived from (seed, block index), so the result does not
/// depend on `jobs`.
SisEstimate sis_estimate(const Graph& g, int k, const SisOptions& options);

/// Per-vertex counts of neighbours by color: counts[i] = |{u in N : c(u) = i}|.
struct ColorProfile {
    std::vector<int> counts;

    int total() const;
    int distinct() const;
    friend bool operator==(const ColorProfile&, const ColorProfile&) = default;
};

ColorProfile color_profile(const Graph& g, const Coloring& c, VertexId v);
/// Profile restricted to an arbitrary neighbourhood subset.
ColorProfile color_profile(const Coloring& c, VertexMask neighbourhood);

/// Law of the number of distinct colors hit by a uniformly random t-subset of
/// the colored multiset described by a profile.
struct DistinctColorDistribution {
    std::vector<std::uint64_t> ways;  ///< ways[s] = number of t-subsets hitting exactly s classes
    std::uint64_t total = 0;          ///< C(d, t)

    double probability(int s) const;
    std::vector<double> probabilities() const;
};

/// Requires 0 <= t <= total() <= 63.
DistinctColorDistribution distinct_color_distribution(const ColorProfile& profile, int t);

/// log T for a vertex with the given profile: the mean over ranks t = 0..d of
/// E[log(k - D_t)]. -infinity when k - D_t = 0 has positive probability.
double t_exact_log(const ColorProfile& profile, int k);
double t_exact(const ColorProfile& profile, int k);

/// sum_i 1/(counts[i] + 1) over all k colors.
Rational w_of(const ColorProfile& profile, int k);

enum class StarRule { LowestIndex, HighestIndex, Random };

/// N*(v): exactly k-1 neighbours of each vertex.
struct StarNeighborhoods {
    int k = 0;
    std::vector<VertexMask> sets;

    VertexMask of(VertexId v) const { return sets[static_cast<std::size_t>(v)]; }
};

/// Throws GraphError if some vertex has fewer than k-1 neighbours.
StarNeighborhoods make_star(const Graph& g, int k, StarRule rule = StarRule::LowestIndex, std::uint64_t seed = 0);
ColorProfile profile_star(const Coloring& c, VertexId v, const StarNeighborhoods& star);

/// sum_v E_c[log t_exact(profile(c, v))] over all k-colorings.
double global_T_log_bound(const Graph& g, int k, std::uint64_t guard = kDefaultEnumerationGuard);
double global_T_bound(const Graph& g, int k, std::uint64_t guard = kDefaultEnumerationGuard);

/// Memoised t_exact_log keyed by the sorted profile.
class TLogCache {
public:
    explicit TLogCache(int k) : k_(k) {}
    double operator()(const ColorProfile& profile);

private:
    int k_;
    std::map<std::vector<int>, double> entries_;
};

}  // namespace chroma
