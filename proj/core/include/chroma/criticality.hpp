#pragma once

#include <optional>
#include <span>
#include <vector>

#include "chroma/big_count.hpp"
#include "chroma/chromatic.hpp"
#include "chroma/graph.hpp"

namespace chroma {

struct CriticalityReport {
    int k = 0;
    int chi = 0;
    bool is_critical = false;
    /// Deleting this edge (or vertex) keeps the chromatic number at k.
    std::optional<Edge> witness_edge;
    std::optional<VertexId> witness_vertex;
    int min_degree = 0;
    /// Edge count against Gallai's bound; set only for critical graphs with k < n <= 2k-1.
    std::optional<bool> gallai_ok;
};

/// k-critical: chi(G) = k and every single edge or vertex deletion leaves a (k-1)-colorable graph.
CriticalityReport is_k_critical(const Graph& g, int k);

/// For each color i, the lowest-indexed vertex of color i whose closed
/// neighbourhood sees all k colors; nullopt if some color has none.
std::optional<std::vector<VertexId>> find_radiant_vertices(const Graph& g, int k, const Coloring& c);

/// As find_radiant_vertices, after checking chi(G) = k. A missing color is a
/// broken invariant and throws std::logic_error.
std::vector<VertexId> radiant_vertices(const Graph& g, int k, const Coloring& c);

/// Pr[c(u) = c(v)] over a uniform k-coloring, exactly.
Rational collision_probability(const Graph& g, int k, VertexId u, VertexId v,
                               std::uint64_t guard = kDefaultEnumerationGuard);

/// P_{G/uv}(k) equals the number of k-colorings of G with c(u) = c(v); the left
/// side is computed by deletion-contraction, the right by enumeration.
bool contraction_identity_check(const Graph& g, int k, VertexId u, VertexId v,
                                std::uint64_t guard = kDefaultEnumerationGuard);

/// E_c[number of monochromatic pairs inside U].
Rational pair_sum_statistic(const Graph& g, int k, VertexMask subset,
                            std::uint64_t guard = kDefaultEnumerationGuard);

/// Minimum of sum_i C(c_i, 2) over k class sizes summing to n, for k <= n <= 2k.
int pairs_lower_bound(int n, int k);

/// Gallai: a k-critical graph on k < n <= 2k-1 vertices has at least
/// (k-1)n/2 + (n-k)(2k-n)/2 - 1 edges.
Rational gallai_lower_bound(int n, int k);

/// For a k-critical graph with k >= 4: G is K_k or has a vertex of degree >= k.
/// Throws std::invalid_argument if the precondition fails.
bool brooks_check(const Graph& g, int k);

/// Vertices u1,u2,u3,v1,v2,v3,w are labelled 0..6.
Graph construct_moser_spindle();
Graph construct_mycielskian_triangle();

/// Rooted tree as a parent array: parent[0] = -1 is the root, parent[i] < i otherwise.
struct TreeShape {
    std::vector<int> parent{-1};
};

TreeShape path_tree(int extra_vertices);
/// Complete binary tree in heap order with the given number of vertices.
TreeShape balanced_tree(int vertices);

/// K_k on 0..k-1 with trees[i] rooted at clique vertex i; tree vertices follow
/// in order. Fewer than k shapes leaves the remaining clique vertices bare.
Graph construct_clique_with_trees(int k, std::span<const TreeShape> trees);

}  // namespace chroma
