#include "chroma/builtins.hpp"

#include <charconv>
#include <stdexcept>

#include "chroma/criticality.hpp"

namespace chroma {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

int parse_int(std::string_view text, std::string_view spec) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
        throw std::invalid_argument("builtin \"" + std::string(spec) + "\": bad integer \"" + std::string(text) + "\"");
    return value;
}

Graph complete(int k) {
    std::vector<Edge> e;
    for (VertexId i = 0; i < k; ++i)
        for (VertexId j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(k, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("builtin cycle: need n >= 3");
    std::vector<Edge> e;
    for (VertexId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph clique_with_trees(int k, int n) {
    if (k < 1 || n < k) throw std::invalid_argument("builtin clique-with-trees: need 1 <= k <= n");
    const int extra = n - k;
    std::vector<TreeShape> trees;
    for (int i = 0; i < k; ++i) trees.push_back(balanced_tree(1 + extra / k + (i < extra % k ? 1 : 0)));
    return construct_clique_with_trees(k, trees);
}

}  // namespace

Graph builtin_graph(std::string_view spec) {
    const auto parts = split(spec, ':');
    const auto name = parts[0];
    auto arity = [&](std::size_t args) {
        if (parts.size() != args + 1)
            throw std::invalid_argument("builtin \"" + std::string(spec) + "\": expected " + std::to_string(args) +
                                        " argument(s)");
    };
    if (name == "moser") { arity(0); return construct_moser_spindle(); }
    if (name == "mycielski3") { arity(0); return construct_mycielskian_triangle(); }
    if (name == "complete") { arity(1); return complete(parse_int(parts[1], spec)); }
    if (name == "cycle") { arity(1); return cycle(parse_int(parts[1], spec)); }
    if (name == "path") { arity(1); return path(parse_int(parts[1], spec)); }
    if (name == "edgeless") { arity(1); return Graph(parse_int(parts[1], spec)); }
    if (name == "clique-with-trees") {
        arity(2);
        return clique_with_trees(parse_int(parts[1], spec), parse_int(parts[2], spec));
    }
    throw std::invalid_argument("unknown builtin graph \"" + std::string(spec) + "\"");
}

std::vector<std::string> builtin_names() {
    return {"complete:k", "cycle:n", "path:n", "edgeless:n", "moser", "mycielski3", "clique-with-trees:k:n"};
}

}  // namespace chroma
