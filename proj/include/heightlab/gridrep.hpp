#ifndef HEIGHTLAB_GRIDREP_HPP
#define HEIGHTLAB_GRIDREP_HPP

#include <vector>

#include "heightlab/common.hpp"
#include "heightlab/triangulation.hpp"

namespace heightlab {

/// Grid-major representation: an height x width matrix of vertex labels.
/// Row 0 is the top row.
struct GridRep {
    int height = 0;
    int width = 0;
    std::vector<std::vector<Vertex>> labels; // labels[row][col]

    Vertex at(int r, int c) const { return labels[r][c]; }
    bool in_range(int r, int c) const {
        return r >= 0 && c >= 0 && r < height && c < width;
    }
    std::vector<Vertex> column(int c) const;
    /// Column content with consecutive duplicates collapsed.
    std::vector<Vertex> column_dedup(int c) const;
};

GridRep make_gridrep(const std::vector<std::vector<Vertex>>& labels);

/// Conditions checked, in order of reporting:
///   shape      rectangular matrix, labels in range
///   cond1      every vertex appears at least once
///   cond2      cells sharing a label form a connected grid subgraph
///   cond3      every required edge is realized by some grid edge
///   exactness  every grid edge joins equal or adjacent labels
///   simple     per column, each label's cells form one contiguous run
Check validate_gridrep_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                             const GridRep& R, bool require_simple, bool exact);

/// Triangulation validation is exact: the contact graph must equal T.
Check validate_gridrep(const Triangulation& T, const GridRep& R, bool require_simple);

} // namespace heightlab

#endif
