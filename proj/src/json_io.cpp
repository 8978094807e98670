// JSON wire formats and the complex digest.  Parsing is strict: unknown
// shapes raise IoError with a stable code rather than being coerced, so the
// CLI can map every malformed input to the same exit status.

#include "scw/json_io.hpp"

#include <cstdio>

namespace scw {

namespace {

const ordered_json& need(const ordered_json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end()) throw IoError("bad-schema", std::string(where) + ": missing '" + key + "'");
    return *it;
}

std::string need_string(const ordered_json& j, const char* key, const char* where) {
    const ordered_json& v = need(j, key, where);
    if (!v.is_string()) throw IoError("bad-schema", std::string(where) + ": '" + key + "' must be a string");
    return v.get<std::string>();
}

int need_dir(const ordered_json& j, const char* where) {
    const ordered_json& v = need(j, "dir", where);
    if (!v.is_number_integer())
        throw IoError("bad-schema", std::string(where) + ": 'dir' must be an integer");
    int d = v.get<int>();
    if (d != 1 && d != -1)
        throw IoError("bad-schema", std::string(where) + ": 'dir' must be 1 or -1");
    return d;
}

}  // namespace

ordered_json complex_to_json(const CellComplex& x) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const std::string& v : x.vertices()) j["vertices"].push_back(v);
    j["edges"] = ordered_json::array();
    for (const EdgeRec& e : x.edges())
        j["edges"].push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
    j["faces"] = ordered_json::array();
    for (const Face2& f : x.faces2()) {
        ordered_json b = ordered_json::array();
        for (const Step& s : f.boundary) b.push_back({{"edge", s.edge}, {"dir", s.dir}});
        j["faces"].push_back({{"id", f.id}, {"boundary", b}});
    }
    return j;
}

CellComplex complex_from_json(const ordered_json& j) {
    if (!j.is_object()) throw IoError("bad-schema", "top level must be an object");
    const ordered_json& jv = need(j, "vertices", "complex");
    const ordered_json& je = need(j, "edges", "complex");
    const ordered_json& jf = need(j, "faces", "complex");
    if (!jv.is_array() || !je.is_array() || !jf.is_array())
        throw IoError("bad-schema", "vertices/edges/faces must be arrays");

    std::vector<std::string> vs;
    for (const ordered_json& v : jv) {
        if (!v.is_string()) throw IoError("bad-schema", "vertex ids must be strings");
        vs.push_back(v.get<std::string>());
    }
    std::vector<EdgeRec> es;
    for (const ordered_json& e : je)
        es.push_back(EdgeRec{need_string(e, "id", "edge"), need_string(e, "src", "edge"),
                             need_string(e, "dst", "edge")});
    std::vector<Face2> fs;
    for (const ordered_json& f : jf) {
        Face2 rec{need_string(f, "id", "face"), {}};
        const ordered_json& b = need(f, "boundary", "face");
        if (!b.is_array()) throw IoError("bad-schema", "face boundary must be an array");
        for (const ordered_json& s : b)
            rec.boundary.push_back(Step{need_string(s, "edge", "step"), need_dir(s, "step")});
        fs.push_back(std::move(rec));
    }
    return CellComplex(std::move(vs), std::move(es), std::move(fs));
}

CellComplex parse_complex(const std::string& text, std::size_t max_cells) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("bad-json", "input is not valid JSON");
    CellComplex x = complex_from_json(j);
    if (max_cells > 0 && x.cell_count() > max_cells)
        throw IoError("too-large", "complex has " + std::to_string(x.cell_count()) +
                                       " cells, limit is " + std::to_string(max_cells));
    return x;
}

ordered_json subcomplex_to_json(const Subcomplex& sub) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const std::string& v : sub.vertices) j["vertices"].push_back(v);
    j["edges"] = ordered_json::array();
    for (const std::string& e : sub.edges) j["edges"].push_back(e);
    j["faces"] = ordered_json::array();
    for (const std::string& f : sub.faces) j["faces"].push_back(f);
    return j;
}

Subcomplex subcomplex_from_json(const ordered_json& j) {
    if (!j.is_object()) throw IoError("bad-schema", "subcomplex must be an object");
    Subcomplex sub;
    auto read = [&j](const char* key, std::set<std::string>& into) {
        const ordered_json& arr = need(j, key, "subcomplex");
        if (!arr.is_array()) throw IoError("bad-schema", std::string("subcomplex ") + key);
        for (const ordered_json& v : arr) {
            if (!v.is_string()) throw IoError("bad-schema", "subcomplex ids must be strings");
            into.insert(v.get<std::string>());
        }
    };
    read("vertices", sub.vertices);
    read("edges", sub.edges);
    read("faces", sub.faces);
    return sub;
}

ordered_json steps_to_json(const std::vector<Step>& steps) {
    ordered_json j = ordered_json::array();
    for (const Step& s : steps) j.push_back({{"edge", s.edge}, {"dir", s.dir}});
    return j;
}

std::vector<Step> steps_from_json(const ordered_json& j) {
    if (!j.is_array()) throw IoError("bad-schema", "path must be an array of steps");
    std::vector<Step> out;
    for (const ordered_json& s : j)
        out.push_back(Step{need_string(s, "edge", "step"), need_dir(s, "step")});
    return out;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string complex_digest(const CellComplex& x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(complex_to_json(x).dump())));
    return std::string("fnv1a64:") + buf;
}

}  // namespace scw
