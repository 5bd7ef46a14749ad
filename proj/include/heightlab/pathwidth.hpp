#ifndef HEIGHTLAB_PATHWIDTH_HPP
#define HEIGHTLAB_PATHWIDTH_HPP

#include <vector>

#include "heightlab/common.hpp"
#include "heightlab/triangulation.hpp"

namespace heightlab {

struct PathDecomposition {
    std::vector<std::vector<Vertex>> bags;
    int width() const;
};

struct PathwidthResult {
    int value = 0;
    PathDecomposition cert;
};

/// Exact pathwidth of an arbitrary graph given as adjacency lists, via the
/// subset DP for vertex separation number (equal to pathwidth).
/// Needs 2^n bytes; `cap` bounds n and defaults to 24.
PathwidthResult pathwidth_exact_graph(const std::vector<std::vector<Vertex>>& adj,
                                      int cap = 24);

PathwidthResult pathwidth_exact(const Triangulation& T, int cap = 24);

/// nullopt iff bags form a valid path decomposition of the graph.
Check validate_path_decomposition(const std::vector<std::vector<Vertex>>& adj,
                                  const PathDecomposition& pd);
Check validate_path_decomposition(const Triangulation& T, const PathDecomposition& pd);

} // namespace heightlab

#endif
