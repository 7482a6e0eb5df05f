#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chroma {

using VertexId = int;
/// Vertex subset of a graph with at most 64 vertices; bit v set means v is present.
using VertexMask = std::uint64_t;
using Edge = std::pair<VertexId, VertexId>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr VertexMask bit(VertexId v) { return VertexMask{1} << v; }
inline constexpr VertexMask low_mask(int n) { return n >= 64 ? ~VertexMask{0} : bit(n) - 1; }
inline int popcount(VertexMask m) { return std::popcount(m); }
inline VertexId lowest(VertexMask m) { return std::countr_zero(m); }

/// Immutable simple undirected graph on vertices 0..n-1 with bit-vector adjacency.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Duplicate pairs are merged; out-of-range endpoints and self-loops throw GraphError.
    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    /// Validates symmetry, range and the absence of loops.
    static Graph from_adjacency(std::vector<VertexMask> adj);

    int order() const { return n_; }
    int size() const { return m_; }
    VertexMask vertices() const { return low_mask(n_); }
    VertexMask neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(VertexId v) const { return popcount(neighbors(v)); }
    bool adjacent(VertexId u, VertexId v) const { return (neighbors(u) & bit(v)) != 0; }
    int min_degree() const;
    int max_degree() const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    const std::vector<VertexMask>& adjacency() const { return adj_; }

    std::size_t hash() const;
    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph(int n, std::vector<VertexMask> adj);

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexMask> adj_;
};

struct GraphHash {
    std::size_t operator()(const Graph& g) const { return g.hash(); }
};

bool is_connected(const Graph& g);
/// Vertex masks of the connected components, ordered by lowest vertex.
std::vector<VertexMask> components(const Graph& g);
/// Subgraph induced on `keep`, relabelled to 0..|keep|-1 preserving vertex order.
Graph induced_subgraph(const Graph& g, VertexMask keep);
Graph disjoint_union(const Graph& a, const Graph& b);

struct TwoCore {
    Graph core;                    ///< relabelled in increasing order of original index
    std::vector<VertexId> kept;    ///< original index of each core vertex
    std::vector<VertexId> removed; ///< original indices in deletion order
};

/// Repeatedly deletes vertices of degree at most one.
TwoCore two_core(const Graph& g);

/// Identifies non-adjacent u and v. The merged vertex takes index min(u, v) with
/// neighbourhood N(u) | N(v); the last vertex n-1 is relabelled into the freed
/// slot max(u, v).
Graph contract(const Graph& g, VertexId u, VertexId v);

Graph delete_edge(const Graph& g, VertexId u, VertexId v);
/// Removes v and shifts higher indices down by one.
Graph delete_vertex(const Graph& g, VertexId v);
bool is_clique(const Graph& g);

/// Elimination order that repeatedly removes a minimum-degree vertex (lowest index on ties).
std::vector<VertexId> degeneracy_order(const Graph& g);

}  // namespace chroma
