#include "chroma/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace chroma {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.substr(0, kHeader.size()) == kHeader) {
        line.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("graph6: empty line", base);

    for (std::size_t i = 0; i < line.size(); ++i) {
        const auto c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", base + i);
    }
    const int n = static_cast<unsigned char>(line[0]) - kBias;
    if (n > kMaxGraph6Order) throw ParseError("graph6: orders above 62 are not supported", base);

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() - 1 < bytes)
        throw ParseError("graph6: truncated bit stream, expected " + std::to_string(bytes) + " data bytes",
                         base + line.size());
    if (line.size() - 1 > bytes) throw ParseError("graph6: trailing bytes", base + 1 + bytes);

    std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
    std::size_t k = 0;
    for (VertexId j = 1; j < n; ++j) {
        for (VertexId i = 0; i < j; ++i, ++k) {
            const int chunk = static_cast<unsigned char>(line[1 + k / 6]) - kBias;
            if (chunk & (1 << (5 - static_cast<int>(k % 6)))) {
                adj[static_cast<std::size_t>(i)] |= bit(j);
                adj[static_cast<std::size_t>(j)] |= bit(i);
            }
        }
    }
    if (bits % 6 != 0) {
        const int last = static_cast<unsigned char>(line[bytes]) - kBias;
        if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: nonzero padding bits", base + bytes);
    }
    return Graph::from_adjacency(std::move(adj));
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxGraph6Order) throw GraphError("encode_graph6: orders above 62 are not supported");
    std::string out(1, static_cast<char>(n + kBias));
    int chunk = 0;
    int filled = 0;
    for (VertexId j = 1; j < n; ++j) {
        for (VertexId i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

Graph parse_edge_list(std::istream& in) {
    std::string text;
    std::size_t lineno = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++lineno;
            if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line(text)) throw ParseError("edge list: missing header line \"n m\"", lineno + 1);
    std::istringstream header(text);
    long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: bad header \"" + text + "\"", lineno);
    if (n > Graph::kMaxVertices) throw ParseError("edge list: order above 64", lineno);

    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
        if (!next_line(text)) throw ParseError("edge list: expected " + std::to_string(m) + " edges", lineno + 1);
        std::istringstream row(text);
        long u = -1, v = -1;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra)) throw ParseError("edge list: bad edge line \"" + text + "\"", lineno);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge list: edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside [0, " + std::to_string(n) + ")", lineno);
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    try {
        return Graph::from_edge_list(static_cast<int>(n), edges);
    } catch (const GraphError& e) {
        throw ParseError(std::string("edge list: ") + e.what(), lineno);
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace chroma
