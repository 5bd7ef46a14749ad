#ifndef HEIGHTLAB_CONVERT_HPP
#define HEIGHTLAB_CONVERT_HPP

#include <string>
#include <vector>

#include "heightlab/contact.hpp"
#include "heightlab/gridrep.hpp"
#include "heightlab/homotopy.hpp"
#include "heightlab/triangulation.hpp"

namespace heightlab {

/// Audit trail for one conversion run. Replaying the converter on the same
/// input reproduces both the artifact and this trace exactly.
struct ConversionTrace {
    struct MoveColumns {
        int move_index = -1;
        int first_column = 0, last_column = 0; // emitted column range
        int staircase_columns = 0;
    };
    std::vector<MoveColumns> move_columns;       // homotopy -> gridrep
    std::vector<std::string> normalization;      // gridrep -> homotopy
    std::vector<std::pair<int, std::string>> sweep; // (seam x, move kind) per move
    bool flipped_vertically = false;
};

/// Builds a grid-major representation of height exactly homotopy_height(H)
/// by growing a contact representation one move at a time. H must validate;
/// non-simple homotopies must sweep every face exactly once positively (the
/// certificates produced by the exact solvers do).
std::pair<GridRep, ConversionTrace> homotopy_to_gridrep(const Triangulation& T,
                                                        const Homotopy& H);

/// Normalizes the representation and sweeps it left to right, reading one
/// move off each interior vertical side. Requires n >= 4. The result
/// validates and its height is at most R.height.
std::pair<Homotopy, ConversionTrace> gridrep_to_homotopy(const Triangulation& T,
                                                         const GridRep& R);

} // namespace heightlab

#endif
