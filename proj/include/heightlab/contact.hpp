#ifndef HEIGHTLAB_CONTACT_HPP
#define HEIGHTLAB_CONTACT_HPP

#include <string>
#include <vector>

#include "heightlab/common.hpp"
#include "heightlab/gridrep.hpp"
#include "heightlab/triangulation.hpp"

namespace heightlab {

/// Contact-representation view of a grid-major representation: every cell
/// becomes a unit square, polygons are the per-vertex unions. Lattice point
/// (r, c) with 0 <= r <= height, 0 <= c <= width is the corner shared by
/// cells (r-1,c-1), (r-1,c), (r,c-1), (r,c); cells outside the rectangle
/// carry the pseudo-label -1.
struct ContactRep {
    GridRep grid;
    int n = 0;

    struct Junction {
        int r = 0, c = 0;
        bool exterior = false;
        bool horizontal = false; // majority direction of its three sides
    };
    struct Side {
        bool vertical = false;
        // vertical: x = c (seam between columns c-1 and c), spans rows [a, b]
        // horizontal: y = r (boundary between rows r-1 and r), spans cols [a, b]
        int coord = 0, a = 0, b = 0;
        Vertex first = -1, second = -1; // left/right or above/below labels
    };

    std::vector<std::vector<std::pair<int, int>>> polygons; // cells per vertex
    std::vector<Junction> junctions;
    std::vector<std::pair<int, int>> corners;
    std::vector<std::pair<int, int>> four_side_points; // invalid if nonempty
    std::vector<Side> sides;

    int height() const { return grid.height; }
    int width() const { return grid.width; }
    Vertex label(int r, int c) const {
        return grid.in_range(r, c) ? grid.labels[r][c] : -1;
    }
};

ContactRep to_contact(const GridRep& R, int n);

/// Structural checks beyond the grid conditions: no point on four sides;
/// in simple mode, x-monotone polygons and the above/below consistency of
/// polygons sharing a horizontal boundary.
Check validate_contact(const ContactRep& C, bool require_simple);

enum class NormalizeMode { Simple, General };

struct NormalizeResult {
    ContactRep rep;
    std::vector<std::string> steps; // audit log, one entry per rewrite
};

/// Normalization pipeline used before extracting a homotopy:
///   1. no interior vertical junctions
///   2. at most one vertical side per interior seam
///   3. boundary reduction (two polygons reach the left boundary; at most
///      three vertices on the whole boundary; single distinct left/right
///      vertex in simple mode, single possibly-equal-then-separated vertex
///      in general mode)
/// Preserves height and the contact graph. Throws
/// BuildError("NormalizationFailed", step) if a step cannot be applied.
NormalizeResult normalize_contact(const ContactRep& C, NormalizeMode mode);

/// Maximal vertical side runs on the seam between columns c-1 and c.
std::vector<ContactRep::Side> seam_sides(const GridRep& R, int c);

/// (#vertical germs, #horizontal germs) at lattice point (r, c).
std::pair<int, int> point_germs(const GridRep& R, int r, int c);

} // namespace heightlab

#endif
