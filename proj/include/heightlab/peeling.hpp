#ifndef HEIGHTLAB_PEELING_HPP
#define HEIGHTLAB_PEELING_HPP

#include <vector>

#include "heightlab/common.hpp"
#include "heightlab/triangulation.hpp"

namespace heightlab {

/// Witness for an outer-planarity value: layer i holds the vertices removed
/// at step i of the peeling process started at `outer_face`.
struct PeelingCertificate {
    int outer_face = -1;
    std::vector<std::vector<Vertex>> layers;
};

struct OuterplanarityResult {
    int value = 0;
    PeelingCertificate cert;
};

/// Peeling count for one fixed outer face.
int outerplanarity_at(const Triangulation& T, int outer_face,
                      PeelingCertificate* cert = nullptr);

/// Minimum peeling count over all outer-face choices, with the certificate
/// of the first minimizing face.
OuterplanarityResult outerplanarity(const Triangulation& T);

/// Replays a certificate; nullopt iff the layers reproduce a valid peeling.
Check validate_peeling(const Triangulation& T, const PeelingCertificate& cert);

/// Peeling count of the h x w grid graph with its natural unbounded face
/// (the same removal process applied to the non-triangulated grid).
int grid_outerplanarity_check(int h, int w);

} // namespace heightlab

#endif
