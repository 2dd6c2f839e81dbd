#pragma once

#include "bei/graph.hpp"

#include <string>
#include <vector>

namespace bei {

// Built-in graphs: figures, cycles, cliques, paths, triangle chains and
// glued families, all constructed programmatically.
std::vector<std::string> corpus_names();
Graph corpus_graph(const std::string& name);

} // namespace bei
