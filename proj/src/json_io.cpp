#include "heightlab/json_io.hpp"

#include <fstream>

namespace heightlab {

namespace {

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw JsonError(path, "expected object");
    auto it = j.find(key);
    if (it == j.end()) throw JsonError(path + "/" + key, "missing field");
    return *it;
}

int need_int(const json& j, const char* key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_number_integer()) throw JsonError(path + "/" + key, "expected integer");
    return v.get<int>();
}

std::string need_str(const json& j, const char* key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_string()) throw JsonError(path + "/" + key, "expected string");
    return v.get<std::string>();
}

std::vector<Vertex> int_list(const json& v, const std::string& path) {
    if (!v.is_array()) throw JsonError(path, "expected array");
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer())
            throw JsonError(path + "/" + std::to_string(i), "expected integer");
        out.push_back(v[i].get<int>());
    }
    return out;
}

} // namespace

json encode(const Triangulation& T) {
    json faces = json::array();
    for (const Face& f : T.faces) faces.push_back({f.cycle[0], f.cycle[1], f.cycle[2]});
    json j{{"schema", "heightlab/v1/triangulation"}, {"n", T.n}, {"faces", faces}};
    j["outer_face"] = T.outer_face ? json(*T.outer_face) : json(nullptr);
    return j;
}

Triangulation decode_triangulation(const json& j, const std::string& path) {
    const json& faces = need(j, "faces", path);
    if (!faces.is_array()) throw JsonError(path + "/faces", "expected array");
    std::vector<std::array<Vertex, 3>> fl;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        auto tri = int_list(faces[i], path + "/faces/" + std::to_string(i));
        if (tri.size() != 3)
            throw JsonError(path + "/faces/" + std::to_string(i), "expected a triple");
        fl.push_back({tri[0], tri[1], tri[2]});
    }
    std::optional<int> outer;
    if (j.contains("outer_face") && !j["outer_face"].is_null()) {
        if (!j["outer_face"].is_number_integer())
            throw JsonError(path + "/outer_face", "expected integer or null");
        outer = j["outer_face"].get<int>();
    }
    try {
        Triangulation T = build_triangulation(fl, outer);
        if (j.contains("n") && j["n"].is_number_integer() && j["n"].get<int>() != T.n)
            throw JsonError(path + "/n", "vertex count does not match face list");
        return T;
    } catch (const BuildError& e) {
        throw JsonError(path + "/faces", e.what());
    }
}

json encode(const GridRep& R) {
    json rows = json::array();
    for (const auto& row : R.labels) rows.push_back(row);
    return json{{"schema", "heightlab/v1/gridrep"},
                {"height", R.height},
                {"width", R.width},
                {"labels", rows}};
}

GridRep decode_gridrep(const json& j, const std::string& path) {
    int h = need_int(j, "height", path), w = need_int(j, "width", path);
    const json& rows = need(j, "labels", path);
    if (!rows.is_array() || int(rows.size()) != h)
        throw JsonError(path + "/labels", "expected " + std::to_string(h) + " rows");
    GridRep R;
    R.height = h;
    R.width = w;
    for (int r = 0; r < h; ++r) {
        auto row = int_list(rows[r], path + "/labels/" + std::to_string(r));
        if (int(row.size()) != w)
            throw JsonError(path + "/labels/" + std::to_string(r),
                            "expected " + std::to_string(w) + " columns");
        R.labels.push_back(row);
    }
    return R;
}

json encode(const OuterAnchor& a) {
    json j{{"u", a.u}, {"v", a.v}, {"s_path", a.s_path}, {"t_path", a.t_path}};
    if (a.kind == OuterAnchor::Kind::Face) {
        j["kind"] = "face";
        j["face"] = a.face;
    } else {
        j["kind"] = "edge";
        j["edge"] = {a.edge[0], a.edge[1]};
    }
    return j;
}

OuterAnchor decode_anchor(const json& j, const std::string& path) {
    OuterAnchor a;
    std::string kind = need_str(j, "kind", path);
    if (kind == "face") {
        a.kind = OuterAnchor::Kind::Face;
        a.face = need_int(j, "face", path);
    } else if (kind == "edge") {
        a.kind = OuterAnchor::Kind::Edge;
        auto e = int_list(need(j, "edge", path), path + "/edge");
        if (e.size() != 2) throw JsonError(path + "/edge", "expected a pair");
        a.edge = {e[0], e[1]};
    } else {
        throw JsonError(path + "/kind", "expected 'face' or 'edge'");
    }
    a.u = need_int(j, "u", path);
    a.v = need_int(j, "v", path);
    a.s_path = int_list(need(j, "s_path", path), path + "/s_path");
    a.t_path = int_list(need(j, "t_path", path), path + "/t_path");
    return a;
}

json encode(const Move& m) {
    json j;
    switch (m.kind) {
    case Move::Kind::FaceFlip:
        j["type"] = "face_flip";
        j["face"] = m.face;
        j["pos"] = m.pos;
        j["dir"] = m.dir == Move::Dir::Grow ? "grow" : "shrink";
        break;
    case Move::Kind::EdgeSlide:
        j["type"] = "edge_slide";
        j["edge"] = {m.edge[0], m.edge[1]};
        j["pos"] = m.pos;
        break;
    case Move::Kind::BoundaryMove:
        j["type"] = "boundary_move";
        j["edge"] = {m.edge[0], m.edge[1]};
        j["end"] = m.end == Move::End::Start ? "start" : "finish";
        j["dir"] = m.dir == Move::Dir::Grow ? "grow" : "shrink";
        break;
    case Move::Kind::BoundaryEdgeSlide:
        j["type"] = "boundary_edge_slide";
        j["edge"] = {m.edge[0], m.edge[1]};
        j["end"] = m.end == Move::End::Start ? "start" : "finish";
        break;
    case Move::Kind::Spike:
        j["type"] = "spike";
        j["edge"] = {m.edge[0], m.edge[1]};
        j["pos"] = m.pos;
        break;
    case Move::Kind::Unspike:
        j["type"] = "unspike";
        j["edge"] = {m.edge[0], m.edge[1]};
        j["pos"] = m.pos;
        break;
    }
    return j;
}

Move decode_move(const json& j, const std::string& path) {
    std::string type = need_str(j, "type", path);
    auto edge_of = [&]() {
        auto e = int_list(need(j, "edge", path), path + "/edge");
        if (e.size() != 2) throw JsonError(path + "/edge", "expected a pair");
        return std::array<Vertex, 2>{e[0], e[1]};
    };
    auto end_of = [&]() {
        std::string e = need_str(j, "end", path);
        if (e == "start") return Move::End::Start;
        if (e == "finish") return Move::End::Finish;
        throw JsonError(path + "/end", "expected 'start' or 'finish'");
    };
    auto dir_of = [&]() {
        std::string d = need_str(j, "dir", path);
        if (d == "grow") return Move::Dir::Grow;
        if (d == "shrink") return Move::Dir::Shrink;
        throw JsonError(path + "/dir", "expected 'grow' or 'shrink'");
    };
    if (type == "face_flip")
        return Move::face_flip(need_int(j, "face", path), need_int(j, "pos", path), dir_of());
    if (type == "edge_slide") {
        auto e = edge_of();
        return Move::edge_slide(e[0], e[1], need_int(j, "pos", path));
    }
    if (type == "boundary_move") {
        auto e = edge_of();
        return Move::boundary_move(e[0], e[1], end_of(), dir_of());
    }
    if (type == "boundary_edge_slide") {
        auto e = edge_of();
        return Move::boundary_edge_slide(e[0], e[1], end_of());
    }
    if (type == "spike") {
        auto e = edge_of();
        return Move::spike(e[0], e[1], need_int(j, "pos", path));
    }
    if (type == "unspike") {
        auto e = edge_of();
        return Move::unspike(e[0], e[1], need_int(j, "pos", path));
    }
    throw JsonError(path + "/type", "unknown move type '" + type + "'");
}

json encode(const Homotopy& H) {
    json curves = json::array();
    for (const Curve& c : H.curves) curves.push_back(c);
    json moves = json::array();
    for (const Move& m : H.moves) moves.push_back(encode(m));
    return json{{"schema", "heightlab/v1/homotopy"},
                {"simple", H.simple},
                {"anchor", encode(H.anchor)},
                {"curves", curves},
                {"moves", moves}};
}

Homotopy decode_homotopy(const json& j, const std::string& path) {
    Homotopy H;
    const json& simple = need(j, "simple", path);
    if (!simple.is_boolean()) throw JsonError(path + "/simple", "expected boolean");
    H.simple = simple.get<bool>();
    H.anchor = decode_anchor(need(j, "anchor", path), path + "/anchor");
    const json& curves = need(j, "curves", path);
    if (!curves.is_array()) throw JsonError(path + "/curves", "expected array");
    for (std::size_t i = 0; i < curves.size(); ++i)
        H.curves.push_back(int_list(curves[i], path + "/curves/" + std::to_string(i)));
    const json& moves = need(j, "moves", path);
    if (!moves.is_array()) throw JsonError(path + "/moves", "expected array");
    for (std::size_t i = 0; i < moves.size(); ++i)
        H.moves.push_back(decode_move(moves[i], path + "/moves/" + std::to_string(i)));
    return H;
}

json encode(const PeelingCertificate& c) {
    json layers = json::array();
    for (const auto& l : c.layers) layers.push_back(l);
    return json{{"schema", "heightlab/v1/peeling"},
                {"outer_face", c.outer_face},
                {"layers", layers}};
}

PeelingCertificate decode_peeling(const json& j, const std::string& path) {
    PeelingCertificate c;
    c.outer_face = need_int(j, "outer_face", path);
    const json& layers = need(j, "layers", path);
    if (!layers.is_array()) throw JsonError(path + "/layers", "expected array");
    for (std::size_t i = 0; i < layers.size(); ++i)
        c.layers.push_back(int_list(layers[i], path + "/layers/" + std::to_string(i)));
    return c;
}

json encode(const PathDecomposition& pd) {
    json bags = json::array();
    for (const auto& b : pd.bags) bags.push_back(b);
    return json{{"schema", "heightlab/v1/pathdecomposition"}, {"bags", bags}};
}

PathDecomposition decode_path_decomposition(const json& j, const std::string& path) {
    PathDecomposition pd;
    const json& bags = need(j, "bags", path);
    if (!bags.is_array()) throw JsonError(path + "/bags", "expected array");
    for (std::size_t i = 0; i < bags.size(); ++i)
        pd.bags.push_back(int_list(bags[i], path + "/bags/" + std::to_string(i)));
    return pd;
}

json encode(const SPGraph& g) {
    json nodes = json::array();
    for (const auto& nd : g.nodes) {
        const char* op = nd.op == SPGraph::Node::Op::Edge      ? "edge"
                         : nd.op == SPGraph::Node::Op::Series ? "series"
                                                              : "parallel";
        nodes.push_back({{"op", op}, {"left", nd.left}, {"right", nd.right}});
    }
    json j{{"schema", "heightlab/v1/spgraph"}, {"nodes", nodes}, {"root", g.root}};
    SPMaterialized M = materialize_sp(g);
    j["n"] = M.n;
    json edges = json::array();
    for (auto [a, b] : M.edges) edges.push_back({a, b});
    j["edges"] = edges;
    return j;
}

SPGraph decode_spgraph(const json& j, const std::string& path) {
    SPGraph g;
    const json& nodes = need(j, "nodes", path);
    if (!nodes.is_array()) throw JsonError(path + "/nodes", "expected array");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::string p = path + "/nodes/" + std::to_string(i);
        std::string op = need_str(nodes[i], "op", p);
        SPGraph::Node nd;
        if (op == "edge")
            nd.op = SPGraph::Node::Op::Edge;
        else if (op == "series")
            nd.op = SPGraph::Node::Op::Series;
        else if (op == "parallel")
            nd.op = SPGraph::Node::Op::Parallel;
        else
            throw JsonError(p + "/op", "unknown op '" + op + "'");
        nd.left = need_int(nodes[i], "left", p);
        nd.right = need_int(nodes[i], "right", p);
        g.nodes.push_back(nd);
    }
    g.root = need_int(j, "root", path);
    if (g.root < 0 || g.root >= int(g.nodes.size()))
        throw JsonError(path + "/root", "root out of range");
    return g;
}

json encode(const ConversionTrace& t) {
    json mc = json::array();
    for (const auto& m : t.move_columns)
        mc.push_back({{"move", m.move_index},
                      {"first_column", m.first_column},
                      {"last_column", m.last_column},
                      {"staircase_columns", m.staircase_columns}});
    json sweep = json::array();
    for (const auto& [x, kind] : t.sweep) sweep.push_back({{"seam", x}, {"move", kind}});
    return json{{"schema", "heightlab/v1/trace"},
                {"move_columns", mc},
                {"normalization", t.normalization},
                {"sweep", sweep},
                {"flipped_vertically", t.flipped_vertically}};
}

json encode(const ParameterReport& r) {
    json j{{"schema", "heightlab/v1/report"},
           {"graph_hash", r.graph_hash},
           {"n", r.n},
           {"pw", r.pw},
           {"op", r.op},
           {"shh", r.shh},
           {"hh", r.hh},
           {"gmh", r.hh},
           {"sgmh", r.shh},
           {"chain_ok", r.chain_ok},
           {"strict_pw_lt_hh", r.strict_pw_lt_hh},
           {"strict_hh_lt_shh", r.strict_hh_lt_shh},
           {"violations", r.violations}};
    j["certificates"] = {{"pathwidth", encode(r.pw_result.cert)},
                         {"peeling", encode(r.op_result.cert)},
                         {"shh", encode(r.shh_result.cert)},
                         {"hh", encode(r.hh_result.cert)}};
    return j;
}

json encode_homotopy_with_graph(const Triangulation& T, const Homotopy& H) {
    json j = encode(H);
    j["graph"] = encode(T);
    return j;
}

json encode_gridrep_with_graph(const Triangulation& T, const GridRep& R) {
    json j = encode(R);
    j["graph"] = encode(T);
    return j;
}

json parse_json_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw JsonError("", "cannot open " + file);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw JsonError("", std::string("parse error in ") + file + ": " + e.what());
    }
}

void write_json_file(const std::string& file, const json& j) {
    std::ofstream out(file);
    if (!out) throw JsonError("", "cannot write " + file);
    out << j.dump(2) << "\n";
}

} // namespace heightlab
