#pragma once

// Independent oracles and fixtures shared by the unit and acceptance tests.
// Nothing here calls into the counting code it is used to check.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/graph_io.hpp"

namespace chroma::testing {

/// Counts proper k-colorings by trying all k^n assignments.
inline std::uint64_t brute_force_count(const Graph& g, int k) {
    const int n = g.order();
    if (n == 0) return 1;
    if (k <= 0) return 0;
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    const auto edges = g.edges();
    while (true) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) {
                ok = false;
                break;
            }
        if (ok) ++count;
        int i = 0;
        while (i < n && ++c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
    }
    return count;
}

/// Every proper k-coloring, found by trying all k^n assignments.
inline std::vector<std::vector<int>> brute_force_colorings(const Graph& g, int k) {
    const int n = g.order();
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    const auto edges = g.edges();
    if (n == 0) return {{}};
    while (true) {
        if (std::none_of(edges.begin(), edges.end(), [&](const Edge& e) {
                return c[static_cast<std::size_t>(e.first)] == c[static_cast<std::size_t>(e.second)];
            }))
            out.push_back(c);
        int i = 0;
        while (i < n && ++c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
    }
    return out;
}

inline int brute_force_chi(const Graph& g) {
    for (int k = 0;; ++k)
        if (brute_force_count(g, k) > 0) return k;
}

/// Random connected graph: a random spanning tree plus each other pair with probability p.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

/// Moser spindle with u1,u2,u3,v1,v2,v3,w as 0..6, typed in independently of the library.
inline Graph moser_edges() {
    return Graph::from_edge_list(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {6, 1}, {6, 2}, {6, 4}, {6, 5}});
}

inline std::string data_path(const std::string& name) { return std::string(CHROMA_TEST_DATA_DIR) + "/" + name; }

/// Graph6 lines of the connected graphs on n vertices.
inline std::vector<std::string> corpus_lines(int n) {
    std::ifstream in(data_path("connected_n" + std::to_string(n) + ".g6"));
    if (!in) throw std::runtime_error("missing corpus file for n=" + std::to_string(n));
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(line);
    return out;
}

inline std::vector<Graph> corpus(int n) {
    std::vector<Graph> out;
    for (const auto& line : corpus_lines(n)) out.push_back(parse_graph6(line));
    return out;
}

}  // namespace chroma::testing
