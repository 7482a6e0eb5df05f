#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chroma/graph.hpp"

namespace chroma {

/// Malformed graph6 or edge-list input. `offset` is a byte offset for graph6
/// and a 1-based line number for edge lists.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (at " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Largest order representable with the single-byte graph6 header.
inline constexpr int kMaxGraph6Order = 62;

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and trailing
/// line terminators are accepted.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

/// Plain edge-list text: "n m" on the first line, then m lines "u v".
Graph parse_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace chroma
