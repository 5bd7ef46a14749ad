#include "heightlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "heightlab/json_io.hpp"
#include "heightlab/svg.hpp"

namespace heightlab {

namespace {

json error_json(const std::string& kind, const std::string& detail,
                const std::string& path = "") {
    json j{{"error", kind}, {"detail", detail}};
    if (!path.empty()) j["path"] = path;
    return j;
}

json violation_json(const Violation& v) {
    return json{{"error", "validation"},
                {"rule", v.rule},
                {"detail", v.detail},
                {"index", v.index}};
}

Triangulation graph_for(const json& artifact, const std::string& graph_path) {
    if (!graph_path.empty()) return decode_triangulation(parse_json_file(graph_path));
    if (artifact.contains("graph")) return decode_triangulation(artifact["graph"], "/graph");
    throw JsonError("/graph", "no embedded graph; pass --graph");
}

void write_text(const std::string& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw JsonError("", "cannot write " + file);
    out << text;
}

int cmd_generate(const std::string& family, int size, std::uint64_t seed,
                 const std::string& out, const std::string& sp_grid_out) {
    if (family == "nested") {
        write_json_file(out, encode(nested_triangles(size)));
    } else if (family == "apextree") {
        write_json_file(out, encode(apex_tree(size).T));
    } else if (family == "apexstrip") {
        write_json_file(out, encode(apex_strip(size).T));
    } else if (family == "stacked") {
        auto ts = enumerate_stacked_triangulations(size, seed, 1);
        write_json_file(out, encode(ts[0]));
    } else if (family == "sp") {
        SPGraph g = random_sp(size, seed);
        write_json_file(out, encode(g));
        if (!sp_grid_out.empty()) write_json_file(sp_grid_out, encode(sp_gridrep(g)));
    } else {
        std::cout << error_json("usage", "unknown family " + family).dump() << "\n";
        return 2;
    }
    return 0;
}

int cmd_compute(const std::string& param, const std::string& in, const std::string& cert,
                const std::string& report_path, std::uint64_t budget) {
    Triangulation T = decode_triangulation(parse_json_file(in));
    SolveOptions opts;
    if (budget) opts.node_budget = budget;
    json out;
    if (param == "op") {
        auto r = outerplanarity(T);
        out = {{"param", "op"}, {"value", r.value}};
        if (!cert.empty()) write_json_file(cert, encode(r.cert));
    } else if (param == "pw") {
        auto r = pathwidth_exact(T);
        out = {{"param", "pw"}, {"value", r.value}};
        if (!cert.empty()) write_json_file(cert, encode(r.cert));
    } else if (param == "shh" || param == "sgmh") {
        auto r = shh_exact(T, opts);
        out = {{"param", param}, {"value", r.value}, {"optimal", r.optimal},
               {"nodes", r.nodes}};
        if (!cert.empty()) write_json_file(cert, encode_homotopy_with_graph(T, r.cert));
    } else if (param == "hh" || param == "gmh") {
        auto r = hh_exact(T, opts);
        out = {{"param", param}, {"value", r.value}, {"optimal", r.optimal},
               {"nodes", r.nodes}};
        if (!cert.empty()) write_json_file(cert, encode_homotopy_with_graph(T, r.cert));
    } else if (param == "all") {
        auto r = verify_chain(T, opts);
        out = encode(r);
        if (!report_path.empty()) write_json_file(report_path, out);
        std::cout << json({{"n", r.n},
                           {"pw", r.pw},
                           {"op", r.op},
                           {"shh", r.shh},
                           {"hh", r.hh},
                           {"chain_ok", r.chain_ok}})
                         .dump()
                  << "\n";
        return r.chain_ok ? 0 : 1;
    } else {
        std::cout << error_json("usage", "unknown param " + param).dump() << "\n";
        return 2;
    }
    if (!report_path.empty()) write_json_file(report_path, out);
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_validate(const std::string& kind, const std::string& in,
                 const std::string& graph_path, bool simple) {
    static const std::set<std::string> kinds{"triangulation", "gridrep", "homotopy",
                                             "peeling", "pathdecomposition"};
    if (!kinds.count(kind)) {
        std::cout << error_json("usage", "unknown kind " + kind).dump() << "\n";
        return 2;
    }
    json j = parse_json_file(in);
    Check bad;
    if (kind == "triangulation") {
        decode_triangulation(j); // throws on any violation
    } else if (kind == "gridrep") {
        Triangulation T = graph_for(j, graph_path);
        bad = validate_gridrep(T, decode_gridrep(j), simple);
    } else if (kind == "homotopy") {
        Triangulation T = graph_for(j, graph_path);
        bad = validate_homotopy(T, decode_homotopy(j));
    } else if (kind == "peeling") {
        Triangulation T = graph_for(j, graph_path);
        bad = validate_peeling(T, decode_peeling(j));
    } else if (kind == "pathdecomposition") {
        Triangulation T = graph_for(j, graph_path);
        bad = validate_path_decomposition(T, decode_path_decomposition(j));
    } else {
        std::cout << error_json("usage", "unknown kind " + kind).dump() << "\n";
        return 2;
    }
    if (bad) {
        std::cout << violation_json(*bad).dump() << "\n";
        return 1;
    }
    std::cout << json{{"ok", true}}.dump() << "\n";
    return 0;
}

int cmd_convert(const std::string& from, const std::string& to, const std::string& in,
                const std::string& out, const std::string& graph_path,
                const std::string& trace_path) {
    json j = parse_json_file(in);
    Triangulation T = graph_for(j, graph_path);
    if (from == "homotopy" && to == "gridrep") {
        Homotopy H = decode_homotopy(j);
        auto [R, trace] = homotopy_to_gridrep(T, H);
        write_json_file(out, encode_gridrep_with_graph(T, R));
        if (!trace_path.empty()) write_json_file(trace_path, encode(trace));
    } else if (from == "gridrep" && to == "homotopy") {
        GridRep R = decode_gridrep(j);
        auto [H, trace] = gridrep_to_homotopy(T, R);
        write_json_file(out, encode_homotopy_with_graph(T, H));
        if (!trace_path.empty()) write_json_file(trace_path, encode(trace));
    } else {
        std::cout << error_json("usage", "unsupported conversion").dump() << "\n";
        return 2;
    }
    return 0;
}

int cmd_render(const std::string& kind, const std::string& in, const std::string& out,
               const std::string& graph_path, int cell) {
    json j = parse_json_file(in);
    RenderOptions opt;
    if (cell > 0) opt.cell = cell;
    std::string svg;
    if (kind == "gridrep") {
        svg = render_gridrep_svg(decode_gridrep(j), opt);
    } else if (kind == "contact") {
        GridRep R = decode_gridrep(j);
        int n = 0;
        for (const auto& row : R.labels)
            for (Vertex v : row) n = std::max(n, v + 1);
        svg = render_contact_svg(to_contact(R, n), opt);
    } else if (kind == "triangulation") {
        svg = render_triangulation_svg(decode_triangulation(j), opt);
    } else if (kind == "homotopy") {
        Triangulation T = graph_for(j, graph_path);
        svg = render_homotopy_svg(T, decode_homotopy(j), opt);
    } else {
        std::cout << error_json("usage", "unknown kind " + kind).dump() << "\n";
        return 2;
    }
    write_text(out, svg);
    return 0;
}

int cmd_verify_chain(const std::string& in, const std::string& report_path,
                     std::uint64_t budget) {
    Triangulation T = decode_triangulation(parse_json_file(in));
    SolveOptions opts;
    if (budget) opts.node_budget = budget;
    auto r = verify_chain(T, opts);
    if (!report_path.empty()) write_json_file(report_path, encode(r));
    std::cout << json({{"pw", r.pw},
                       {"op", r.op},
                       {"shh", r.shh},
                       {"hh", r.hh},
                       {"chain_ok", r.chain_ok},
                       {"violations", r.violations}})
                     .dump()
              << "\n";
    return r.chain_ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"heightlab: height parameters of planar triangulations"};
    app.require_subcommand(1);

    std::string family, in, out, cert, report, graph, trace, param, kind, from, to,
        sp_grid_out;
    int size = 0, cell = 0;
    std::uint64_t seed = 0, budget = 0;
    bool simple = false;

    auto* gen = app.add_subcommand("generate", "generate a fixture graph");
    gen->add_option("--family", family)->required();
    gen->add_option("--size", size)->required();
    gen->add_option("--seed", seed);
    gen->add_option("--out", out)->required();
    gen->add_option("--sp-gridrep", sp_grid_out);

    auto* comp = app.add_subcommand("compute", "compute height parameters");
    comp->add_option("--param", param)->required();
    comp->add_option("--in", in)->required();
    comp->add_option("--cert", cert);
    comp->add_option("--report", report);
    comp->add_option("--budget", budget);

    auto* val = app.add_subcommand("validate", "validate an artifact");
    val->add_option("--kind", kind)->required();
    val->add_option("--in", in)->required();
    val->add_option("--graph", graph);
    val->add_flag("--simple", simple);

    auto* conv = app.add_subcommand("convert", "convert between certificates");
    conv->add_option("--from", from)->required();
    conv->add_option("--to", to)->required();
    conv->add_option("--in", in)->required();
    conv->add_option("--out", out)->required();
    conv->add_option("--graph", graph);
    conv->add_option("--trace", trace);
    conv->add_flag("--simple", simple);

    auto* rend = app.add_subcommand("render", "render an artifact to SVG");
    rend->add_option("--kind", kind)->required();
    rend->add_option("--in", in)->required();
    rend->add_option("--out", out)->required();
    rend->add_option("--graph", graph);
    rend->add_option("--cell", cell);

    auto* chain = app.add_subcommand("verify-chain", "check the inequality chain");
    chain->add_option("--in", in)->required();
    chain->add_option("--report", report);
    chain->add_option("--budget", budget);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::cout << error_json("usage", e.what()).dump() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(family, size, seed, out, sp_grid_out);
        if (comp->parsed()) return cmd_compute(param, in, cert, report, budget);
        if (val->parsed()) return cmd_validate(kind, in, graph, simple);
        if (conv->parsed()) return cmd_convert(from, to, in, out, graph, trace);
        if (rend->parsed()) return cmd_render(kind, in, out, graph, cell);
        if (chain->parsed()) return cmd_verify_chain(in, report, budget);
    } catch (const JsonError& e) {
        std::cout << error_json("schema", e.what(), e.path()).dump() << "\n";
        return 1;
    } catch (const BuildError& e) {
        std::cout << error_json(e.code(), e.what()).dump() << "\n";
        return 1;
    }
    std::cout << error_json("usage", "no subcommand").dump() << "\n";
    return 2;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args);
}

} // namespace heightlab
