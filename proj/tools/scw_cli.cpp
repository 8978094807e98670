// Command-line front end.
//
// Every subcommand reads an input complex (or diagram), runs one library
// query, and prints exactly one JSON report on stdout:
//
//   { "command": ..., "parameters": {...}, "digest": "fnv1a64:...",
//     "result": {...}, "timing_ms": ... }
//
// Reports are byte-identical across runs except for timing_ms; --summary adds
// a one-line human verdict on stderr.  Exit codes: 0 = success / property
// holds, 2 = usage error, 3 = property violation found, 4 = invalid input.
// SCW_MAX_CELLS (default 10000, 0 = uncapped) bounds accepted instance sizes,
// including generated ones.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scw/complex.hpp"
#include "scw/diagrams.hpp"
#include "scw/generators.hpp"
#include "scw/json_io.hpp"
#include "scw/metrics.hpp"
#include "scw/nerve.hpp"
#include "scw/pieces.hpp"
#include "scw/walls.hpp"

namespace {

using scw::ordered_json;

std::size_t max_cells_cap() {
    const char* env = std::getenv("SCW_MAX_CELLS");
    if (env == nullptr || *env == '\0') return 10000;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') return 10000;
    return static_cast<std::size_t>(v);
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw scw::IoError("io", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw scw::IoError("io", "cannot write " + path);
    out << bytes;
    if (!out) throw scw::IoError("io", "short write to " + path);
}

// Commands other than `validate` assume a structurally valid complex; feeding
// them a broken one is an input error, not a property violation.
scw::CellComplex load_complex(const std::string& path, bool require_valid) {
    scw::CellComplex x = scw::parse_complex(slurp(path), max_cells_cap());
    if (require_valid) {
        const auto issues = scw::validate(x);
        if (!issues.empty())
            throw scw::IoError("invalid-complex",
                               issues.front().code + ": " + issues.front().detail);
    }
    return x;
}

scw::Subcomplex load_subcomplex(const std::string& path, const scw::CellComplex& x) {
    ordered_json j = ordered_json::parse(slurp(path), nullptr, false);
    if (j.is_discarded()) throw scw::IoError("bad-json", path + " is not valid JSON");
    scw::Subcomplex sub = scw::subcomplex_from_json(j);
    if (!scw::is_subcomplex(x, sub))
        throw scw::IoError("bad-reference", path + " is not a closed subcomplex of the input");
    return sub;
}

// Id lists accept comma-separated tokens, but generated ids themselves
// contain commas ("f:0,0"), so tokens containing ':' are taken verbatim;
// pass such ids one per flag occurrence.
std::vector<std::string> expand_ids(const std::vector<std::string>& tokens) {
    std::vector<std::string> out;
    for (const std::string& t : tokens) {
        if (t.find(':') != std::string::npos) {
            if (!t.empty()) out.push_back(t);
            continue;
        }
        std::string cur;
        for (char c : t) {
            if (c == ',') {
                if (!cur.empty()) out.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (const std::string& id : ids) {
        if (!out.empty()) out += ",";
        out += id;
    }
    return out;
}

ordered_json dist_json(const scw::FaceDist& d) {
    if (d.unbounded()) return nullptr;
    return d.value();
}

ordered_json wall_json(const scw::Wall& w) {
    ordered_json j;
    j["edges"] = w.edges;
    j["kind"] = w.kind;
    j["log"] = ordered_json::array();
    for (const auto& step : w.log)
        j["log"].push_back({{"face", step.face}, {"chosen", step.chosen}});
    j["conflicts"] = ordered_json::array();
    for (const auto& c : w.conflicts)
        j["conflicts"].push_back({{"face", c.face}, {"edge", c.edge}});
    return j;
}

ordered_json nerve_json(const scw::NerveGraph& n) {
    ordered_json j;
    j["nodes"] = n.nodes;
    j["edges"] = ordered_json::array();
    for (const auto& [a, b] : n.edges) j["edges"].push_back(ordered_json::array({a, b}));
    return j;
}

scw::DiscDiagram diagram_from_json(const ordered_json& j, std::size_t cap) {
    if (!j.is_object()) throw scw::IoError("bad-schema", "diagram must be an object");
    scw::DiscDiagram d;
    d.complex = scw::complex_from_json(j);
    if (cap > 0 && d.complex.cell_count() > cap)
        throw scw::IoError("too-large", "diagram exceeds the cell cap");
    auto it = j.find("rotation");
    if (it == j.end() || !it->is_object())
        throw scw::IoError("bad-schema", "diagram: missing 'rotation' object");
    for (const auto& [vertex, darts] : it->items())
        d.rotation[vertex] = scw::steps_from_json(darts);
    auto bt = j.find("boundary");
    if (bt == j.end()) throw scw::IoError("bad-schema", "diagram: missing 'boundary'");
    d.boundary = scw::steps_from_json(*bt);
    auto mt = j.find("map");
    if (mt == j.end() || !mt->is_object())
        throw scw::IoError("bad-schema", "diagram: missing 'map' object");
    auto read_map = [&](const char* key, std::map<std::string, std::string>& into) {
        auto kt = mt->find(key);
        if (kt == mt->end() || !kt->is_object())
            throw scw::IoError("bad-schema", std::string("diagram map: missing '") + key + "'");
        for (const auto& [from, to] : kt->items()) {
            if (!to.is_string()) throw scw::IoError("bad-schema", "diagram map values must be strings");
            into[from] = to.get<std::string>();
        }
    };
    read_map("vertices", d.map.vertices);
    read_map("edges", d.map.edges);
    read_map("faces", d.map.faces);
    return d;
}

const scw::Face2& need_face(const scw::CellComplex& x, const std::string& id) {
    if (!x.has_face2(id)) throw std::out_of_range("no 2-cell '" + id + "' in the input");
    return x.face2(id);
}

void need_edge(const scw::CellComplex& x, const std::string& id) {
    if (!x.has_edge(id)) throw std::out_of_range("no edge '" + id + "' in the input");
}

int need_node(const scw::FaceGraph& g, const std::string& id) {
    const int n = g.node(id);
    if (n < 0) throw std::out_of_range("'" + id + "' is not a face of the metric");
    return n;
}

struct Outcome {
    int code = 0;
    std::string digest;
    ordered_json result;
    std::string summary;
};

// Aggregation mirroring the library's whole-graph link check, restricted to a
// node subset: a genuine short cycle beats an abort, an abort beats success.
scw::LinkReport links_over(const scw::FaceGraph& g, const std::vector<int>& nodes) {
    scw::LinkReport agg;
    agg.six_large = true;
    for (int n : nodes) {
        const scw::LinkReport r = scw::link_six_large_node(g, n);
        if (!r.six_large && !r.aborted) return r;
        if (r.aborted && !agg.aborted) {
            agg = r;
            agg.six_large = false;
        }
    }
    return agg;
}

ordered_json link_json(const scw::LinkReport& r) {
    ordered_json j;
    j["six_large"] = r.six_large;
    j["node"] = r.node;
    j["cycle"] = r.cycle;
    j["aborted"] = r.aborted;
    if (r.aborted) j["abort_detail"] = r.abort_detail;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite 2-complex small-cancellation workbench"};
    app.require_subcommand(1);
    bool want_summary = false;
    app.add_flag("--summary", want_summary, "print a one-line human verdict on stderr");

    // Option storage shared across subcommands; each branch reads only its own.
    std::string in_path = "-";
    std::string from_id, to_id, sub1_path, sub2_path, out_path, edge_id, face_id;
    std::vector<std::string> id_tokens;
    std::string diagram_path, ambient_path;
    int cn_n = 6, qk = 0, radius_r = 0, gen_radius = 0, gen_n = 0, gen_m = 0;
    int gen_width = 0, gen_length = 0, gen_subdiv = 1;
    bool strict = false, all_walls = false, interior_only = false;

    auto* c_validate = app.add_subcommand("validate", "structural invariants of a complex");
    c_validate->add_option("--in", in_path, "complex JSON ('-' = stdin)");

    auto* c_check = app.add_subcommand("check", "C(n) / strict C(n) conditions");
    c_check->add_option("--cn", cn_n, "the n of C(n)")->required();
    c_check->add_flag("--strict", strict, "also bound wrap-around reads");
    c_check->add_option("--in", in_path, "complex JSON ('-' = stdin)");

    auto* c_dfdist = app.add_subcommand("dfdist", "face-metric distance between two faces");
    c_dfdist->add_option("--from", from_id)->required();
    c_dfdist->add_option("--to", to_id)->required();
    c_dfdist->add_option("--in", in_path, "complex JSON ('-' = stdin)");

    auto* c_hull = app.add_subcommand("hull", "convex hull of a face set");
    c_hull->add_option("--faces", id_tokens, "face ids (repeatable; ',' splits ids without ':')")->required();
    c_hull->add_option("--out", out_path, "write the hull subcomplex JSON here");
    c_hull->add_option("--in", in_path, "complex JSON ('-' = stdin)");

    auto* c_quasi = app.add_subcommand("quasiconvex", "k-quasiconvexity of a subcomplex");
    c_quasi->add_option("--sub", sub1_path, "subcomplex JSON file")->required();
    c_quasi->add_option("--k", qk)->required();
    c_quasi->add_option("--in", in_path, "complex JSON ('-' = stdin)");

    auto* c_coarse = app.add_subcommand("coarse-diam", "coarse intersection diameter");
    c_coarse->add_option("--sub1", sub1_path)->required();
    c_coarse->add_option("--sub2", sub2_path)->required();
    c_coarse->add_option("--r", radius_r)->required();
    c_coarse->add_option("--in", in_path, "complex JSON ('-' = stdin)");

    auto* c_wall = app.add_subcommand("wall", "grow a wall from an edge of a face");
    c_wall->add_option("--edge", edge_id)->required();
    c_wall->add_option("--face", face_id)->required();
    c_wall->add_flag("--all", all_walls, "enumerate all partner choices");
    c_wall->add_option("--in", in_path, "complex JSON ('-' = stdin)");

    auto* c_half = app.add_subcommand("halfspaces", "split the complex along a wall");
    c_half->add_option("--wall", sub1_path, "wall JSON file")->required();
    c_half->add_option("--in", in_path, "complex JSON ('-' = stdin)");

    auto* c_seg = app.add_subcommand("wall-segment", "verify a face sequence as a wall segment");
    c_seg->add_option("--faces", id_tokens, "face ids (repeatable; ',' splits ids without ':')")->required();
    c_seg->add_option("--in", in_path, "complex JSON ('-' = stdin)");

    auto* c_nerve = app.add_subcommand("nerve", "face-adjacency nerve graph");
    c_nerve->add_option("--out", out_path, "write the nerve JSON here");
    c_nerve->add_option("--in", in_path, "complex JSON ('-' = stdin)");

    auto* c_sys = app.add_subcommand("systolic-check", "6-largeness of face links");
    c_sys->add_flag("--interior-only", interior_only, "verdict over interior faces only");
    c_sys->add_option("--in", in_path, "complex JSON ('-' = stdin)");

    auto* c_pull = app.add_subcommand("pullback", "flat nerve region back to a 2-complex patch");
    c_pull->add_option("--vertices", id_tokens, "nerve node ids (repeatable; ',' splits ids without ':')")->required();
    c_pull->add_option("--in", in_path, "complex JSON ('-' = stdin)");

    auto* c_green = app.add_subcommand("greendlinger", "disc-diagram shell/spur count");
    c_green->add_option("--diagram", diagram_path)->required();
    c_green->add_option("--ambient", ambient_path)->required();

    auto* c_gen = app.add_subcommand("gen", "generate an example family member");
    c_gen->require_subcommand(1);
    auto* g_hex = c_gen->add_subcommand("hex", "hexagonal ball");
    g_hex->add_option("--radius", gen_radius)->required();
    g_hex->add_option("--subdiv", gen_subdiv);
    g_hex->add_option("--out", out_path, "file prefix for complex + mark sidecars");
    auto* g_petal = c_gen->add_subcommand("petal", "2n-gon with bigon petals");
    g_petal->add_option("--n", gen_n)->required();
    g_petal->add_option("--out", out_path, "file prefix for complex + mark sidecars");
    auto* g_thick = c_gen->add_subcommand("thicksquare", "octagon with a thick boundary ring");
    g_thick->add_option("--out", out_path, "file prefix for complex + mark sidecars");
    auto* g_blow = c_gen->add_subcommand("blowup", "Cayley-graph blow-up of Z x Z/2");
    g_blow->add_option("--m", gen_m)->required();
    g_blow->add_option("--out", out_path, "file prefix for complex + mark sidecars");
    auto* g_band = c_gen->add_subcommand("band", "hexagon strip");
    g_band->add_option("--width", gen_width)->required();
    g_band->add_option("--length", gen_length)->required();
    g_band->add_option("--subdiv", gen_subdiv);
    g_band->add_option("--out", out_path, "file prefix for complex + mark sidecars");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        ordered_json rep;
        rep["command"] = "usage-error";
        rep["parameters"] = ordered_json::object();
        rep["digest"] = "";
        rep["result"] = {{"error", {{"code", "usage"}, {"detail", e.what()}}}};
        rep["timing_ms"] = 0;
        std::cout << rep.dump(2) << "\n";
        return 2;
    }

    std::string command;
    ordered_json params = ordered_json::object();
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;

    try {
        if (*c_validate) {
            command = "validate";
            params["in"] = in_path;
            const scw::CellComplex x = load_complex(in_path, /*require_valid=*/false);
            const auto issues = scw::validate(x);
            out.digest = scw::complex_digest(x);
            out.result["ok"] = issues.empty();
            out.result["issues"] = ordered_json::array();
            for (const auto& i : issues)
                out.result["issues"].push_back({{"code", i.code}, {"detail", i.detail}});
            out.code = issues.empty() ? 0 : 3;
            out.summary = issues.empty() ? "valid"
                                         : std::to_string(issues.size()) + " validation issue(s)";
        } else if (*c_check) {
            command = "check";
            params["in"] = in_path;
            params["cn"] = cn_n;
            params["strict"] = strict;
            const scw::CellComplex x = load_complex(in_path, true);
            out.digest = scw::complex_digest(x);
            ordered_json viols = ordered_json::array();
            if (strict) {
                for (const auto& v : scw::check_strict_cn(x, cn_n))
                    viols.push_back({{"face", v.face},
                                     {"start", v.start},
                                     {"dir", v.dir},
                                     {"plength", v.plength.value()}});
            } else {
                for (const auto& v : scw::check_cn(x, cn_n))
                    viols.push_back({{"face", v.face}, {"plength", v.plength.value()}});
            }
            out.result["n"] = cn_n;
            out.result["strict"] = strict;
            out.result["holds"] = viols.empty();
            out.result["violations"] = viols;
            out.code = viols.empty() ? 0 : 3;
            out.summary = std::string(strict ? "strict " : "") + "C(" + std::to_string(cn_n) +
                          "): " + (viols.empty() ? "holds" : std::to_string(viols.size()) + " violation(s)");
        } else if (*c_dfdist) {
            command = "dfdist";
            params["in"] = in_path;
            params["from"] = from_id;
            params["to"] = to_id;
            const scw::CellComplex x = load_complex(in_path, true);
            out.digest = scw::complex_digest(x);
            const scw::FaceGraph g = scw::build_face_graph(x);
            need_node(g, from_id);
            need_node(g, to_id);
            const scw::FaceDist d = scw::face_distance(g, from_id, to_id);
            out.result["from"] = from_id;
            out.result["to"] = to_id;
            out.result["distance"] = dist_json(d);
            out.code = 0;
            out.summary = "d_f(" + from_id + ", " + to_id + ") = " +
                          (d.unbounded() ? "unbounded" : std::to_string(d.value()));
        } else if (*c_hull) {
            command = "hull";
            params["in"] = in_path;
            const std::vector<std::string> seed_ids = expand_ids(id_tokens);
            params["faces"] = join_ids(seed_ids);
            if (!out_path.empty()) params["out"] = out_path;
            const scw::CellComplex x = load_complex(in_path, true);
            out.digest = scw::complex_digest(x);
            const scw::FaceGraph g = scw::build_face_graph(x);
            scw::Subcomplex seed;
            for (const std::string& id : seed_ids) {
                need_node(g, id);  // 2-cell or isolated edge
                if (x.has_face2(id))
                    seed.faces.insert(id);
                else
                    seed.edges.insert(id);
            }
            const scw::Subcomplex hull = scw::convex_hull(x, g, scw::close_cells(x, seed));
            out.result["hull"] = scw::subcomplex_to_json(hull);
            out.result["face_count"] = hull.faces.size();
            if (!out_path.empty()) {
                spill(out_path, scw::subcomplex_to_json(hull).dump(2) + "\n");
                out.result["written"] = out_path;
            }
            out.code = 0;
            out.summary = "hull spans " + std::to_string(hull.faces.size()) + " 2-cell(s)";
        } else if (*c_quasi) {
            command = "quasiconvex";
            params["in"] = in_path;
            params["sub"] = sub1_path;
            params["k"] = qk;
            const scw::CellComplex x = load_complex(in_path, true);
            out.digest = scw::complex_digest(x);
            const scw::FaceGraph g = scw::build_face_graph(x);
            const scw::Subcomplex sub = load_subcomplex(sub1_path, x);
            const bool ok = scw::is_k_quasiconvex(x, g, sub, qk);
            out.result["k"] = qk;
            out.result["holds"] = ok;
            out.code = ok ? 0 : 3;
            out.summary = std::to_string(qk) + "-quasiconvex: " + (ok ? "holds" : "fails");
        } else if (*c_coarse) {
            command = "coarse-diam";
            params["in"] = in_path;
            params["sub1"] = sub1_path;
            params["sub2"] = sub2_path;
            params["r"] = radius_r;
            const scw::CellComplex x = load_complex(in_path, true);
            out.digest = scw::complex_digest(x);
            const scw::FaceGraph g = scw::build_face_graph(x);
            const scw::Subcomplex a = load_subcomplex(sub1_path, x);
            const scw::Subcomplex b = load_subcomplex(sub2_path, x);
            const scw::FaceDist d = scw::coarse_intersection_diameter(x, g, a, b, radius_r);
            out.result["r"] = radius_r;
            out.result["diameter"] = dist_json(d);
            out.code = 0;
            out.summary = "coarse intersection diameter at r=" + std::to_string(radius_r) +
                          ": " + (d.unbounded() ? "unbounded" : std::to_string(d.value()));
        } else if (*c_wall) {
            command = "wall";
            params["in"] = in_path;
            params["edge"] = edge_id;
            params["face"] = face_id;
            params["all"] = all_walls;
            const scw::CellComplex x = load_complex(in_path, true);
            out.digest = scw::complex_digest(x);
            need_edge(x, edge_id);
            const scw::Face2& f = need_face(x, face_id);
            bool on_face = false;
            for (const scw::Step& s : f.boundary) on_face |= (s.edge == edge_id);
            if (!on_face)
                throw std::invalid_argument("edge '" + edge_id + "' is not on the boundary of '" +
                                            face_id + "'");
            // Seed with the least opposite partner of the edge inside the face.
            std::set<std::string> partners;
            for (const auto& pr : scw::opposite_pairs(x, face_id)) {
                if (f.boundary[pr.p].edge == edge_id) partners.insert(f.boundary[pr.q].edge);
                if (f.boundary[pr.q].edge == edge_id) partners.insert(f.boundary[pr.p].edge);
            }
            if (partners.empty()) {
                out.result["kind"] = "blocked";
                out.result["edges"] = ordered_json::array({edge_id});
                out.result["reason"] = "no opposite partner in the chosen face";
                out.code = 3;
                out.summary = "blocked: no opposite partner";
            } else {
                const std::vector<std::string> seed = {edge_id, *partners.begin()};
                if (all_walls) {
                    const auto walls = scw::enumerate_walls(x, seed);
                    out.result["count"] = walls.size();
                    out.result["walls"] = ordered_json::array();
                    bool any_clean = false;
                    for (const auto& w : walls) {
                        out.result["walls"].push_back(wall_json(w));
                        any_clean |= (w.kind == "wall");
                    }
                    out.code = any_clean ? 0 : 3;
                    out.summary = std::to_string(walls.size()) + " closure(s)";
                } else {
                    const scw::Wall w = scw::extend_to_wall(x, seed);
                    out.result = wall_json(w);
                    out.code = (w.kind == "wall") ? 0 : 3;
                    out.summary = w.kind + " with " + std::to_string(w.edges.size()) + " edge(s)";
                }
            }
        } else if (*c_half) {
            command = "halfspaces";
            params["in"] = in_path;
            params["wall"] = sub1_path;
            const scw::CellComplex x = load_complex(in_path, true);
            out.digest = scw::complex_digest(x);
            ordered_json wj = ordered_json::parse(slurp(sub1_path), nullptr, false);
            if (wj.is_discarded()) throw scw::IoError("bad-json", sub1_path + " is not valid JSON");
            if (!wj.is_object() || !wj.contains("edges") || !wj["edges"].is_array())
                throw scw::IoError("bad-schema", "wall file needs an 'edges' array");
            scw::Wall w;
            for (const auto& e : wj["edges"]) {
                if (!e.is_string()) throw scw::IoError("bad-schema", "wall edges must be strings");
                need_edge(x, e.get<std::string>());
                w.edges.push_back(e.get<std::string>());
            }
            std::sort(w.edges.begin(), w.edges.end());
            w.edges.erase(std::unique(w.edges.begin(), w.edges.end()), w.edges.end());
            w.kind = wj.value("kind", "wall");
            const scw::Subcomplex carrier = scw::wall_carrier(x, w);
            const scw::HalfspaceResult hs = scw::halfspaces(x, w);
            out.result["ok"] = hs.ok && hs.invariants_ok;
            out.result["ncomponents"] = hs.ncomponents;
            out.result["invariants_ok"] = hs.invariants_ok;
            out.result["carrier"] = scw::subcomplex_to_json(carrier);
            if (hs.ok) {
                out.result["left"] = scw::subcomplex_to_json(hs.left);
                out.result["right"] = scw::subcomplex_to_json(hs.right);
            } else {
                out.result["component_faces"] = ordered_json::array();
                for (const auto& comp : hs.components)
                    out.result["component_faces"].push_back(comp.faces.size());
            }
            out.code = (hs.ok && hs.invariants_ok) ? 0 : 3;
            out.summary = std::to_string(hs.ncomponents) + " complement component(s)";
        } else if (*c_seg) {
            command = "wall-segment";
            params["in"] = in_path;
            const std::vector<std::string> faces = expand_ids(id_tokens);
            params["faces"] = join_ids(faces);
            const scw::CellComplex x = load_complex(in_path, true);
            out.digest = scw::complex_digest(x);
            const scw::FaceGraph g = scw::build_face_graph(x);
            for (const auto& id : faces) need_face(x, id);
            const auto seg = scw::segment_from_faces(x, g, faces);
            out.result["found"] = seg.has_value();
            if (seg) {
                out.result["faces"] = seg->faces;
                out.result["links"] = seg->links;
            }
            out.code = seg ? 0 : 3;
            out.summary = seg ? "wall segment with " + std::to_string(seg->links.size()) + " link(s)"
                              : "not a wall segment";
        } else if (*c_nerve) {
            command = "nerve";
            params["in"] = in_path;
            if (!out_path.empty()) params["out"] = out_path;
            const scw::CellComplex x = load_complex(in_path, true);
            out.digest = scw::complex_digest(x);
            const scw::NerveGraph n = scw::nerve(x);
            out.result = nerve_json(n);
            out.result["node_count"] = n.nodes.size();
            out.result["edge_count"] = n.edges.size();
            if (!out_path.empty()) {
                spill(out_path, nerve_json(n).dump(2) + "\n");
                out.result["written"] = out_path;
            }
            out.code = 0;
            out.summary = "nerve: " + std::to_string(n.nodes.size()) + " node(s), " +
                          std::to_string(n.edges.size()) + " edge(s)";
        } else if (*c_sys) {
            command = "systolic-check";
            params["in"] = in_path;
            params["interior_only"] = interior_only;
            const scw::CellComplex x = load_complex(in_path, true);
            out.digest = scw::complex_digest(x);
            const scw::FaceGraph g = scw::build_face_graph(x);
            const scw::SystolicReport rep = scw::local_systolic_report(x, g);
            scw::LinkReport verdict = rep.link;
            bool ok = rep.ok;
            if (interior_only) {
                std::vector<int> nodes;
                for (const auto& id : rep.interior_faces) nodes.push_back(g.node(id));
                verdict = links_over(g, nodes);
                ok = verdict.six_large;
            }
            out.result["ok"] = ok;
            out.result["link"] = link_json(verdict);
            out.result["interior_faces"] = rep.interior_faces;
            out.result["boundary_faces"] = rep.boundary_faces;
            out.code = ok ? 0 : 3;
            out.summary = std::string(ok ? "links 6-large" : "link violation") +
                          (interior_only ? " (interior only)" : "");
        } else if (*c_pull) {
            command = "pullback";
            params["in"] = in_path;
            const std::vector<std::string> node_ids = expand_ids(id_tokens);
            params["vertices"] = join_ids(node_ids);
            const scw::CellComplex x = load_complex(in_path, true);
            out.digest = scw::complex_digest(x);
            const scw::FaceGraph g = scw::build_face_graph(x);
            const scw::FlatPullback fp = scw::pullback_flat(x, g, node_ids);
            out.result["ok"] = fp.ok;
            out.result["patch"] = scw::subcomplex_to_json(fp.patch);
            if (!fp.ok) {
                out.result["breaking_vertex"] = fp.breaking_vertex;
                out.result["reason"] = fp.reason;
            }
            out.code = fp.ok ? 0 : 3;
            out.summary = fp.ok ? "flat region pulls back" : "not flat: " + fp.reason;
        } else if (*c_green) {
            command = "greendlinger";
            params["diagram"] = diagram_path;
            params["ambient"] = ambient_path;
            const scw::CellComplex ambient = load_complex(ambient_path, true);
            out.digest = scw::complex_digest(ambient);
            ordered_json dj = ordered_json::parse(slurp(diagram_path), nullptr, false);
            if (dj.is_discarded())
                throw scw::IoError("bad-json", diagram_path + " is not valid JSON");
            const scw::DiscDiagram d = diagram_from_json(dj, max_cells_cap());
            const scw::GreendlingerReport rep = scw::greendlinger_check(ambient, d);
            out.result["verdict"] = rep.verdict;
            out.result["spur_count"] = rep.spur_count;
            out.result["low_shells"] = ordered_json::array();
            for (const auto& s : rep.low_shells)
                out.result["low_shells"].push_back({{"face", s.face},
                                                    {"grade", s.grade.unbounded()
                                                                  ? ordered_json(nullptr)
                                                                  : ordered_json(s.grade.value())},
                                                    {"outer_arc", scw::steps_to_json(s.outer_arc)},
                                                    {"inner_arc", scw::steps_to_json(s.inner_arc)}});
            out.result["detail"] = rep.detail;
            const bool fine = rep.verdict == "three-or-more" || rep.verdict == "ladder" ||
                              rep.verdict == "trivial";
            out.code = fine ? 0 : 3;
            out.summary = "verdict: " + rep.verdict;
        } else if (*c_gen) {
            scw::GeneratedComplex gc;
            if (*g_hex) {
                command = "gen hex";
                params["radius"] = gen_radius;
                params["subdiv"] = gen_subdiv;
                gc = scw::gen_hex(gen_radius, gen_subdiv);
            } else if (*g_petal) {
                command = "gen petal";
                params["n"] = gen_n;
                gc = scw::gen_petal(gen_n);
            } else if (*g_thick) {
                command = "gen thicksquare";
                gc = scw::gen_thick_square();
            } else if (*g_blow) {
                command = "gen blowup";
                params["m"] = gen_m;
                gc = scw::gen_blowup(gen_m);
            } else {
                command = "gen band";
                params["width"] = gen_width;
                params["length"] = gen_length;
                params["subdiv"] = gen_subdiv;
                gc = scw::gen_band(gen_length, gen_width, gen_subdiv);
            }
            const std::size_t cap = max_cells_cap();
            if (cap > 0 && gc.complex.cell_count() > cap)
                throw scw::IoError("too-large",
                                   "generated complex has " + std::to_string(gc.complex.cell_count()) +
                                       " cells, limit is " + std::to_string(cap));
            if (!out_path.empty()) params["out"] = out_path;
            out.digest = scw::complex_digest(gc.complex);
            out.result["cells"] = gc.cells;
            ordered_json marks = ordered_json::array();
            for (const auto& [name, sub] : gc.marks) marks.push_back(name);
            out.result["marks"] = marks;
            if (!out_path.empty()) {
                ordered_json written = ordered_json::array();
                spill(out_path + ".json", scw::complex_to_json(gc.complex).dump(2) + "\n");
                written.push_back(out_path + ".json");
                for (const auto& [name, sub] : gc.marks) {
                    spill(out_path + "." + name + ".json",
                          scw::subcomplex_to_json(sub).dump(2) + "\n");
                    written.push_back(out_path + "." + name + ".json");
                }
                out.result["written"] = written;
            } else {
                out.result["complex"] = scw::complex_to_json(gc.complex);
                ordered_json mj = ordered_json::object();
                for (const auto& [name, sub] : gc.marks) mj[name] = scw::subcomplex_to_json(sub);
                out.result["mark_subcomplexes"] = mj;
            }
            out.code = 0;
            out.summary = "generated " + std::to_string(gc.complex.faces2().size()) + " 2-cell(s), " +
                          std::to_string(gc.complex.cell_count()) + " cells total";
        }
    } catch (const scw::IoError& e) {
        out.code = 4;
        out.digest = "";
        out.result = {{"error", {{"code", e.code()}, {"detail", e.what()}}}};
        out.summary = std::string("input error: ") + e.what();
    } catch (const std::invalid_argument& e) {
        out.code = 4;
        out.digest = "";
        out.result = {{"error", {{"code", "bad-argument"}, {"detail", e.what()}}}};
        out.summary = std::string("input error: ") + e.what();
    } catch (const std::out_of_range& e) {
        out.code = 4;
        out.digest = "";
        out.result = {{"error", {{"code", "bad-reference"}, {"detail", e.what()}}}};
        out.summary = std::string("input error: ") + e.what();
    }

    const auto t1 = std::chrono::steady_clock::now();
    ordered_json rep;
    rep["command"] = command;
    rep["parameters"] = params;
    rep["digest"] = out.digest;
    rep["result"] = out.result;
    rep["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::cout << rep.dump(2) << "\n";
    if (want_summary) std::cerr << out.summary << "\n";
    return out.code;
}
