#ifndef HEIGHTLAB_JSON_IO_HPP
#define HEIGHTLAB_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "heightlab/convert.hpp"
#include "heightlab/families.hpp"
#include "heightlab/gridrep.hpp"
#include "heightlab/homotopy.hpp"
#include "heightlab/pathwidth.hpp"
#include "heightlab/peeling.hpp"
#include "heightlab/solvers.hpp"
#include "heightlab/triangulation.hpp"

namespace heightlab {

using json = nlohmann::json;

/// Thrown on malformed or mistyped JSON; `path` is the JSON pointer of the
/// first offending element.
class JsonError : public std::runtime_error {
public:
    JsonError(std::string path, const std::string& detail)
        : std::runtime_error(path + ": " + detail), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

json encode(const Triangulation& T);
json encode(const GridRep& R);
json encode(const OuterAnchor& a);
json encode(const Move& m);
json encode(const Homotopy& H); // graph not embedded; see encode_homotopy_with_graph
json encode(const PeelingCertificate& c);
json encode(const PathDecomposition& pd);
json encode(const SPGraph& g);
json encode(const ConversionTrace& t);
json encode(const ParameterReport& r);

json encode_homotopy_with_graph(const Triangulation& T, const Homotopy& H);
json encode_gridrep_with_graph(const Triangulation& T, const GridRep& R);

Triangulation decode_triangulation(const json& j, const std::string& path = "");
GridRep decode_gridrep(const json& j, const std::string& path = "");
OuterAnchor decode_anchor(const json& j, const std::string& path = "");
Move decode_move(const json& j, const std::string& path = "");
Homotopy decode_homotopy(const json& j, const std::string& path = "");
PeelingCertificate decode_peeling(const json& j, const std::string& path = "");
PathDecomposition decode_path_decomposition(const json& j, const std::string& path = "");
SPGraph decode_spgraph(const json& j, const std::string& path = "");

json parse_json_file(const std::string& file);
void write_json_file(const std::string& file, const json& j);

} // namespace heightlab

#endif
