#include "chroma/criticality.hpp"

#include <stdexcept>
#include <string>

namespace chroma {

CriticalityReport is_k_critical(const Graph& g, int k) {
    CriticalityReport r;
    r.k = k;
    r.chi = chromatic_number(g);
    r.min_degree = g.min_degree();
    if (r.chi != k) return r;

    // Removing one edge or vertex lowers chi by at most one, so criticality
    // reduces to (k-1)-colorability of each deletion.
    for (auto [u, v] : g.edges()) {
        if (!is_colorable(delete_edge(g, u, v), k - 1)) {
            r.witness_edge = Edge{u, v};
            return r;
        }
    }
    for (VertexId v = 0; v < g.order(); ++v) {
        if (!is_colorable(delete_vertex(g, v), k - 1)) {
            r.witness_vertex = v;
            return r;
        }
    }
    r.is_critical = true;
    const int n = g.order();
    if (k < n && n <= 2 * k - 1) r.gallai_ok = Rational(g.size()) >= gallai_lower_bound(n, k);
    return r;
}

std::optional<std::vector<VertexId>> find_radiant_vertices(const Graph& g, int k, const Coloring& c) {
    const std::uint64_t all = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    std::vector<VertexId> out(static_cast<std::size_t>(k), -1);
    int found = 0;
    for (VertexId v = 0; v < g.order() && found < k; ++v) {
        const int cv = c[v];
        if (out[static_cast<std::size_t>(cv)] != -1) continue;
        std::uint64_t seen = std::uint64_t{1} << cv;
        for (VertexMask m = g.neighbors(v); m; m &= m - 1) seen |= std::uint64_t{1} << c[lowest(m)];
        if (seen == all) {
            out[static_cast<std::size_t>(cv)] = v;
            ++found;
        }
    }
    if (found < k) return std::nullopt;
    return out;
}

std::vector<VertexId> radiant_vertices(const Graph& g, int k, const Coloring& c) {
    if (!is_proper(g, c) || c.k != k) throw std::invalid_argument("radiant_vertices: coloring is not a proper k-coloring");
    if (chromatic_number(g) != k)
        throw std::invalid_argument("radiant_vertices: chromatic number differs from k=" + std::to_string(k));
    auto r = find_radiant_vertices(g, k, c);
    if (!r) throw std::logic_error("radiant_vertices: some color class has no radiant vertex");
    return *r;
}

namespace {

void check_pair(const Graph& g, VertexId u, VertexId v, const char* what) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
        throw std::invalid_argument(std::string(what) + ": need two distinct vertices of the graph");
}

}  // namespace

Rational collision_probability(const Graph& g, int k, VertexId u, VertexId v, std::uint64_t guard) {
    check_pair(g, u, v, "collision_probability");
    std::uint64_t same = 0, total = 0;
    for_each_coloring(
        g, k,
        [&](const Coloring& c) {
            ++total;
            if (c[u] == c[v]) ++same;
        },
        guard);
    if (total == 0) throw std::domain_error("collision_probability: graph has no k-coloring");
    return Rational(BigInt(same), BigInt(total));
}

bool contraction_identity_check(const Graph& g, int k, VertexId u, VertexId v, std::uint64_t guard) {
    check_pair(g, u, v, "contraction_identity_check");
    if (g.adjacent(u, v)) throw std::invalid_argument("contraction_identity_check: vertices are adjacent");
    std::uint64_t same = 0;
    for_each_coloring(
        g, k,
        [&](const Coloring& c) {
            if (c[u] == c[v]) ++same;
        },
        guard);
    return count_colorings(contract(g, u, v), k) == BigCount{same};
}

Rational pair_sum_statistic(const Graph& g, int k, VertexMask subset, std::uint64_t guard) {
    subset &= g.vertices();
    BigInt pairs = 0;
    std::uint64_t total = 0;
    for_each_coloring(
        g, k,
        [&](const Coloring& c) {
            ++total;
            for (int i = 0; i < k; ++i) {
                const long s = popcount(c.color_class(i) & subset);
                pairs += s * (s - 1) / 2;
            }
        },
        guard);
    if (total == 0) throw std::domain_error("pair_sum_statistic: graph has no k-coloring");
    return Rational(pairs, BigInt(total));
}

int pairs_lower_bound(int n, int k) {
    if (k < 1 || n < k || n > 2 * k)
        throw std::invalid_argument("pairs_lower_bound: need k <= n <= 2k, got n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k));
    return n - k;
}

Rational gallai_lower_bound(int n, int k) {
    if (n <= k || n > 2 * k - 1)
        throw std::invalid_argument("gallai_lower_bound: need k < n <= 2k-1, got n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k));
    return Rational((k - 1) * n, 2) + Rational((n - k) * (2 * k - n), 2) - 1;
}

bool brooks_check(const Graph& g, int k) {
    if (k < 4) throw std::invalid_argument("brooks_check: requires k >= 4");
    if (!is_k_critical(g, k).is_critical) throw std::invalid_argument("brooks_check: graph is not k-critical");
    if (g.order() == k && is_clique(g)) return true;
    return g.max_degree() >= k;
}

Graph construct_moser_spindle() {
    // u1 u2 u3 v1 v2 v3 w
    return Graph::from_edge_list(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {6, 1}, {6, 2}, {6, 4}, {6, 5}});
}

Graph construct_mycielskian_triangle() {
    return Graph::from_edge_list(7, {{0, 1}, {0, 2}, {1, 2},                          // u_i ~ u_j
                                     {3, 1}, {3, 2}, {4, 0}, {4, 2}, {5, 0}, {5, 1},  // v_i ~ u_j, i != j
                                     {6, 3}, {6, 4}, {6, 5}});                        // w ~ v_i
}

TreeShape path_tree(int extra_vertices) {
    if (extra_vertices < 0) throw std::invalid_argument("path_tree: negative length");
    TreeShape t;
    for (int i = 1; i <= extra_vertices; ++i) t.parent.push_back(i - 1);
    return t;
}

TreeShape balanced_tree(int vertices) {
    if (vertices < 1) throw std::invalid_argument("balanced_tree: need at least the root");
    TreeShape t;
    for (int i = 1; i < vertices; ++i) t.parent.push_back((i - 1) / 2);
    return t;
}

Graph construct_clique_with_trees(int k, std::span<const TreeShape> trees) {
    if (k < 1) throw std::invalid_argument("construct_clique_with_trees: k must be positive");
    if (static_cast<int>(trees.size()) > k) throw std::invalid_argument("construct_clique_with_trees: more trees than clique vertices");
    std::vector<Edge> edges;
    for (VertexId i = 0; i < k; ++i)
        for (VertexId j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    int next = k;
    for (std::size_t root = 0; root < trees.size(); ++root) {
        const auto& parent = trees[root].parent;
        if (parent.empty() || parent[0] != -1)
            throw std::invalid_argument("construct_clique_with_trees: tree " + std::to_string(root) + " lacks a root");
        std::vector<VertexId> label(parent.size());
        label[0] = static_cast<VertexId>(root);
        for (std::size_t i = 1; i < parent.size(); ++i) {
            if (parent[i] < 0 || static_cast<std::size_t>(parent[i]) >= i)
                throw std::invalid_argument("construct_clique_with_trees: tree " + std::to_string(root) +
                                            " node " + std::to_string(i) + " has an invalid parent");
            label[i] = next++;
            edges.emplace_back(label[static_cast<std::size_t>(parent[i])], label[i]);
        }
    }
    return Graph::from_edge_list(next, edges);
}

}  // namespace chroma
