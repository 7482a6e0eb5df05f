#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Named graphs: complete:k, cycle:n, path:n, edgeless:n, moser, mycielski3,
/// clique-with-trees:k:n (n-k tree vertices spread round-robin over the clique
/// as balanced binary trees). Throws std::invalid_argument on unknown names.
Graph builtin_graph(std::string_view spec);

std::vector<std::string> builtin_names();

}  // namespace chroma
