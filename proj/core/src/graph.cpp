#include "chroma/graph.hpp"

#include <algorithm>
#include <limits>

namespace chroma {

namespace {

void check_vertex(const Graph& g, VertexId v, const char* what) {
    if (v < 0 || v >= g.order())
        throw GraphError(std::string(what) + ": vertex " + std::to_string(v) +
                         " out of range for n=" + std::to_string(g.order()));
}

std::string pair_text(VertexId u, VertexId v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n) : Graph(n, std::vector<VertexMask>(static_cast<std::size_t>(std::max(n, 0)), 0)) {}

Graph::Graph(int n, std::vector<VertexMask> adj) : n_(n), adj_(std::move(adj)) {
    if (n < 0 || n > kMaxVertices)
        throw GraphError("graph order " + std::to_string(n) + " outside [0, 64]");
    int deg_sum = 0;
    for (VertexMask m : adj_) deg_sum += popcount(m);
    m_ = deg_sum / 2;
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
    if (n < 0 || n > kMaxVertices)
        throw GraphError("graph order " + std::to_string(n) + " outside [0, 64]");
    std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge " + pair_text(u, v) + " has an endpoint outside [0, " +
                             std::to_string(n) + ")");
        if (u == v) throw GraphError("edge " + pair_text(u, v) + " is a self-loop");
        adj[static_cast<std::size_t>(u)] |= bit(v);
        adj[static_cast<std::size_t>(v)] |= bit(u);
    }
    return Graph(n, std::move(adj));
}

Graph Graph::from_adjacency(std::vector<VertexMask> adj) {
    const int n = static_cast<int>(adj.size());
    if (n > kMaxVertices) throw GraphError("graph order exceeds 64");
    const VertexMask all = low_mask(n);
    for (int v = 0; v < n; ++v) {
        const VertexMask nb = adj[static_cast<std::size_t>(v)];
        if (nb & ~all) throw GraphError("adjacency of vertex " + std::to_string(v) + " out of range");
        if (nb & bit(v)) throw GraphError("self-loop at vertex " + std::to_string(v));
        for (VertexMask rest = nb; rest; rest &= rest - 1) {
            const VertexId u = lowest(rest);
            if (!(adj[static_cast<std::size_t>(u)] & bit(v)))
                throw GraphError("asymmetric adjacency between " + pair_text(u, v));
        }
    }
    return Graph(n, std::move(adj));
}

int Graph::min_degree() const {
    int d = std::numeric_limits<int>::max();
    for (VertexId v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
    int d = 0;
    for (VertexId v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (VertexId u = 0; u < n_; ++u)
        for (VertexMask rest = neighbors(u) & ~low_mask(u + 1); rest; rest &= rest - 1)
            out.emplace_back(u, lowest(rest));
    return out;
}

std::size_t Graph::hash() const {
    // FNV-1a over the order and adjacency words.
    std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(n_);
    for (VertexMask m : adj_) {
        h ^= m + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

std::vector<VertexMask> components(const Graph& g) {
    std::vector<VertexMask> out;
    VertexMask unseen = g.vertices();
    while (unseen) {
        VertexMask comp = bit(lowest(unseen));
        VertexMask frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f));
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, VertexMask keep) {
    keep &= g.vertices();
    std::vector<VertexId> index(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (VertexMask k = keep; k; k &= k - 1) index[static_cast<std::size_t>(lowest(k))] = next++;
    std::vector<VertexMask> adj(static_cast<std::size_t>(next), 0);
    for (VertexMask k = keep; k; k &= k - 1) {
        const VertexId v = lowest(k);
        VertexMask nb = 0;
        for (VertexMask r = g.neighbors(v) & keep; r; r &= r - 1)
            nb |= bit(index[static_cast<std::size_t>(lowest(r))]);
        adj[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])] = nb;
    }
    return Graph::from_adjacency(std::move(adj));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > Graph::kMaxVertices) throw GraphError("disjoint_union: order exceeds 64");
    std::vector<VertexMask> adj = a.adjacency();
    for (VertexMask m : b.adjacency()) adj.push_back(m << a.order());
    return Graph::from_adjacency(std::move(adj));
}

TwoCore two_core(const Graph& g) {
    TwoCore out;
    VertexMask alive = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < g.order(); ++v) {
            if ((alive & bit(v)) && popcount(g.neighbors(v) & alive) <= 1) {
                alive &= ~bit(v);
                out.removed.push_back(v);
                changed = true;
            }
        }
    }
    for (VertexMask a = alive; a; a &= a - 1) out.kept.push_back(lowest(a));
    out.core = induced_subgraph(g, alive);
    return out;
}

Graph contract(const Graph& g, VertexId u, VertexId v) {
    check_vertex(g, u, "contract");
    check_vertex(g, v, "contract");
    if (u == v) throw GraphError("contract: identical vertices " + pair_text(u, v));
    if (g.adjacent(u, v)) throw GraphError("contract: vertices " + pair_text(u, v) + " are adjacent");
    const VertexId keep = std::min(u, v);
    const VertexId drop = std::max(u, v);
    const VertexId last = g.order() - 1;

    std::vector<VertexMask> adj = g.adjacency();
    const VertexMask merged = adj[static_cast<std::size_t>(keep)] | adj[static_cast<std::size_t>(drop)];
    for (VertexMask r = adj[static_cast<std::size_t>(drop)]; r; r &= r - 1) {
        auto& nb = adj[static_cast<std::size_t>(lowest(r))];
        nb = (nb & ~bit(drop)) | bit(keep);
    }
    adj[static_cast<std::size_t>(keep)] = merged;
    adj[static_cast<std::size_t>(drop)] = 0;

    // Move the last vertex into the freed slot.
    if (drop != last) {
        const VertexMask nb_last = adj[static_cast<std::size_t>(last)];
        for (VertexMask r = nb_last; r; r &= r - 1) {
            auto& nb = adj[static_cast<std::size_t>(lowest(r))];
            nb = (nb & ~bit(last)) | bit(drop);
        }
        adj[static_cast<std::size_t>(drop)] = nb_last;
    }
    adj.pop_back();
    return Graph::from_adjacency(std::move(adj));
}

Graph delete_edge(const Graph& g, VertexId u, VertexId v) {
    check_vertex(g, u, "delete_edge");
    check_vertex(g, v, "delete_edge");
    if (!g.adjacent(u, v)) throw GraphError("delete_edge: " + pair_text(u, v) + " is not an edge");
    std::vector<VertexMask> adj = g.adjacency();
    adj[static_cast<std::size_t>(u)] &= ~bit(v);
    adj[static_cast<std::size_t>(v)] &= ~bit(u);
    return Graph::from_adjacency(std::move(adj));
}

Graph delete_vertex(const Graph& g, VertexId v) {
    check_vertex(g, v, "delete_vertex");
    return induced_subgraph(g, g.vertices() & ~bit(v));
}

bool is_clique(const Graph& g) {
    const int n = g.order();
    return g.size() == n * (n - 1) / 2;
}

std::vector<VertexId> degeneracy_order(const Graph& g) {
    std::vector<VertexId> order;
    order.reserve(static_cast<std::size_t>(g.order()));
    VertexMask alive = g.vertices();
    while (alive) {
        VertexId best = -1;
        int best_deg = std::numeric_limits<int>::max();
        for (VertexMask a = alive; a; a &= a - 1) {
            const VertexId v = lowest(a);
            const int d = popcount(g.neighbors(v) & alive);
            if (d < best_deg) {
                best = v;
                best_deg = d;
            }
        }
        order.push_back(best);
        alive &= ~bit(best);
    }
    return order;
}

}  // namespace chroma
