#ifndef HEIGHTLAB_SVG_HPP
#define HEIGHTLAB_SVG_HPP

#include <string>

#include "heightlab/contact.hpp"
#include "heightlab/gridrep.hpp"
#include "heightlab/homotopy.hpp"
#include "heightlab/triangulation.hpp"

namespace heightlab {

struct RenderOptions {
    int cell = 24; // pixels per grid unit
};

/// Deterministic renderers: same input, byte-identical output.
/// Grid cells as unit squares, y grows downward (matrix row order).
std::string render_gridrep_svg(const GridRep& R, const RenderOptions& opt = {});
/// Merged orthogonal polygon outlines, one per vertex.
std::string render_contact_svg(const ContactRep& C, const RenderOptions& opt = {});
/// Barycentric straight-line drawing with the outer face on a triangle.
std::string render_triangulation_svg(const Triangulation& T, const RenderOptions& opt = {});
/// One panel per curve over the triangulation drawing.
std::string render_homotopy_svg(const Triangulation& T, const Homotopy& H,
                                const RenderOptions& opt = {});

} // namespace heightlab

#endif
