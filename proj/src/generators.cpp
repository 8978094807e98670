// Deterministic example families.
//
// Hex patches are assembled from axial cell coordinates: corners live at
// exact integer points (three times the cube coordinates of the cell plus a
// per-corner offset), side k runs corner k -> corner k+1 counterclockwise,
// and a side shared with the neighbour in direction k is that neighbour's
// side (k+3) % 6 run the other way.  The lexicographically smaller (q, r, k)
// triple owns the side and emits its edges; the other cell reuses them
// reversed.  Subdivision inserts evenly spaced integer points along each
// side, so geometry stays exact for any subdiv.
//
// The other families (petal, thick square, blow-up) are fixed incidence
// tables written out longhand; their interesting subcomplexes are attached
// as marks so tests and the CLI never re-derive ids.

#include "scw/generators.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace scw {

namespace {

// Incremental complex assembly with id-level deduplication; keeps first-seen
// emission order so generated complexes are byte-stable run to run.
class Builder {
  public:
    void vertex(const std::string& id) {
        if (vseen_.insert(id).second) verts_.push_back(id);
    }
    void edge(const std::string& id, const std::string& src, const std::string& dst) {
        vertex(src);
        vertex(dst);
        if (eseen_.insert(id).second) {
            edges_.push_back(EdgeRec{id, src, dst});
            ends_.emplace(id, std::make_pair(src, dst));
        }
    }
    void face(const std::string& id, std::vector<Step> boundary) {
        faces_.push_back(Face2{id, std::move(boundary)});
    }
    const std::string& src_of(const Step& s) const {
        const auto& e = ends_.at(s.edge);
        return s.dir > 0 ? e.first : e.second;
    }
    CellComplex build() const { return CellComplex(verts_, edges_, faces_); }

  private:
    std::vector<std::string> verts_;
    std::vector<EdgeRec> edges_;
    std::vector<Face2> faces_;
    std::set<std::string> vseen_, eseen_;
    std::map<std::string, std::pair<std::string, std::string>> ends_;
};

std::string num(long long v) { return std::to_string(v); }

// --- hexagonal tiling -------------------------------------------------------

using Vec3 = std::array<long long, 3>;

// Axial offset of the neighbour across side k.
constexpr std::array<std::pair<int, int>, 6> kNb = {
    {{1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}, {1, 0}}};

// Corner k of the cell at cube coordinates c sits at 3c + kCorner[k]; all
// six offsets sum to zero componentwise-compatible with x+y+z = 0, so two
// coordinates determine the third and make a stable vertex id.
constexpr std::array<Vec3, 6> kCorner = {{{2, -1, -1},
                                          {1, 1, -2},
                                          {-1, 2, -1},
                                          {-2, 1, 1},
                                          {-1, -1, 2},
                                          {1, -2, 1}}};

Vec3 cell_cube(int q, int r) { return {q, -q - r, r}; }

Vec3 corner_pos(int q, int r, int k) {
    const Vec3 c = cell_cube(q, r);
    return {3 * c[0] + kCorner[k][0], 3 * c[1] + kCorner[k][1], 3 * c[2] + kCorner[k][2]};
}

// Plane coordinates: project the integer 3-space position along its diagonal.
std::pair<long long, long long> uv_of(const Vec3& p) { return {p[0] - p[1], p[1] - p[2]}; }

std::string hex_cell_id(int q, int r) { return "f:" + num(q) + "," + num(r); }
std::string corner_id(const Vec3& p) { return "v:" + num(p[0]) + "," + num(p[1]); }
std::string side_vertex_id(int q, int r, int k, int t) {
    return "sv:" + num(q) + "," + num(r) + "," + num(k) + "," + num(t);
}
std::string side_edge_id(int q, int r, int k, int t) {
    return "e:" + num(q) + "," + num(r) + "," + num(k) + "," + num(t);
}

}  // namespace

GeneratedComplex gen_hex_patch(const std::vector<std::pair<int, int>>& coords, int subdiv) {
    if (subdiv < 1) throw std::invalid_argument("gen_hex_patch: subdiv must be >= 1");
    std::set<std::pair<int, int>> present(coords.begin(), coords.end());
    if (present.size() != coords.size())
        throw std::invalid_argument("gen_hex_patch: duplicate cell coordinate");

    // The smaller (q, r, k) of the two triples naming a shared side emits it.
    auto owns = [&](int q, int r, int k) {
        const int nq = q + kNb[k].first, nr = r + kNb[k].second;
        if (!present.count({nq, nr})) return true;
        return std::tuple(q, r, k) < std::tuple(nq, nr, (k + 3) % 6);
    };

    Builder b;
    HexGeometry geo;
    auto place = [&](const std::string& id, const Vec3& p) {
        geo.vertex_uv.emplace(id, uv_of(p));  // first placement wins; all agree
    };

    for (const auto& [q, r] : coords) {
        for (int k = 0; k < 6; ++k) {
            if (!owns(q, r, k)) continue;
            const Vec3 ca = corner_pos(q, r, k);
            const Vec3 cb = corner_pos(q, r, (k + 1) % 6);
            const std::string va = corner_id(ca), vb = corner_id(cb);
            const Vec3 delta = {cb[0] - ca[0], cb[1] - ca[1], cb[2] - ca[2]};
            b.vertex(va);
            place(va, {ca[0] * subdiv, ca[1] * subdiv, ca[2] * subdiv});
            for (int t = 1; t < subdiv; ++t) {
                const std::string sv = side_vertex_id(q, r, k, t);
                b.vertex(sv);
                place(sv, {ca[0] * subdiv + t * delta[0], ca[1] * subdiv + t * delta[1],
                           ca[2] * subdiv + t * delta[2]});
            }
            b.vertex(vb);
            place(vb, {cb[0] * subdiv, cb[1] * subdiv, cb[2] * subdiv});
            for (int t = 0; t < subdiv; ++t) {
                const std::string from = (t == 0) ? va : side_vertex_id(q, r, k, t);
                const std::string to = (t == subdiv - 1) ? vb : side_vertex_id(q, r, k, t + 1);
                b.edge(side_edge_id(q, r, k, t), from, to);
            }
        }
    }
    for (const auto& [q, r] : coords) {
        std::vector<Step> bd;
        bd.reserve(6 * static_cast<std::size_t>(subdiv));
        for (int k = 0; k < 6; ++k) {
            if (owns(q, r, k)) {
                for (int t = 0; t < subdiv; ++t) bd.push_back({side_edge_id(q, r, k, t), +1});
            } else {
                const int nq = q + kNb[k].first, nr = r + kNb[k].second, nk = (k + 3) % 6;
                for (int t = subdiv - 1; t >= 0; --t) bd.push_back({side_edge_id(nq, nr, nk, t), -1});
            }
        }
        b.face(hex_cell_id(q, r), std::move(bd));
    }

    GeneratedComplex gc;
    gc.complex = b.build();
    gc.geometry = std::move(geo);
    return gc;
}

GeneratedComplex gen_hex(int r, int subdiv) {
    if (r < 0) throw std::invalid_argument("gen_hex: radius must be >= 0");
    std::vector<std::pair<int, int>> coords;
    for (int q = -r; q <= r; ++q)
        for (int rr = std::max(-r, -q - r); rr <= std::min(r, -q + r); ++rr)
            coords.emplace_back(q, rr);
    GeneratedComplex gc = gen_hex_patch(coords, subdiv);
    gc.cells["center"] = hex_cell_id(0, 0);
    return gc;
}

GeneratedComplex gen_band(int l, int w, int subdiv) {
    if (l < 1 || w < 1) throw std::invalid_argument("gen_band: length and width must be >= 1");
    // Odd-row offset layout: rows share the r coordinate, columns are shifted
    // back every other row so the strip stays straight in the plane.
    std::vector<std::pair<int, int>> coords;
    for (int row = 0; row < w; ++row)
        for (int col = 0; col < l; ++col) coords.emplace_back(col - (row - (row & 1)) / 2, row);
    return gen_hex_patch(coords, subdiv);
}

GeneratedComplex gen_petal(int n) {
    if (n < 2) throw std::invalid_argument("gen_petal: n must be >= 2");
    const int total = 2 * n;
    Builder b;
    for (int i = 0; i < total; ++i) b.vertex("v" + num(i));
    for (int i = 1; i <= total; ++i) b.edge("s" + num(i), "v" + num(i - 1), "v" + num(i % total));
    for (int i = 1; i <= total; ++i) b.edge("f" + num(i), "v" + num(i - 1), "v" + num(i % total));
    std::vector<Step> core;
    for (int i = 1; i <= total; ++i) core.push_back({"s" + num(i), +1});
    b.face("R", std::move(core));
    for (int i = 1; i <= total; ++i)
        b.face("B" + num(i), {{"s" + num(i), +1}, {"f" + num(i), -1}});

    GeneratedComplex gc;
    gc.complex = b.build();
    std::vector<std::string> y1, y2;
    for (int i = 1; i <= n; ++i) y1.push_back("B" + num(i));
    for (int i = n + 1; i <= total; ++i) y2.push_back("B" + num(i));
    gc.marks["Y1"] = span_faces(gc.complex, y1);
    gc.marks["Y2"] = span_faces(gc.complex, y2);
    gc.cells["core"] = "R";
    return gc;
}

GeneratedComplex gen_thick_square() {
    Builder b;
    auto a = [](int k) { return "a" + num(((k % 8) + 8) % 8); };
    auto u = [](int j) { return "u" + num(j); };
    auto w = [](int j) { return "w" + num(j); };
    auto qv = [](int j, int t) { return "q" + num(j) + "_" + num(t); };

    // Central octagon rim.
    for (int k = 0; k < 8; ++k) b.edge("om" + num(k), a(k), a(k + 1));
    // One ladder block per quadrant: rung + inner path + rung + outer edge.
    for (int j = 0; j < 4; ++j) {
        b.edge("rl" + num(j), u(j), qv(j, 0));
        for (int t = 0; t < 4; ++t) b.edge("in" + num(j) + "_" + num(t), qv(j, t), qv(j, t + 1));
        b.edge("rr" + num(j), qv(j, 4), w(j));
        b.edge("ob" + num(j), w(j), u(j));
    }
    // Corner gaps joining consecutive blocks.
    for (int j = 0; j < 4; ++j) {
        b.edge("ga" + num(j), w((j + 3) % 4), u(j));
        b.edge("gb" + num(j), qv(j, 0), qv((j + 3) % 4, 4));
    }
    // Spokes from the octagon out to the inner paths.
    for (int j = 0; j < 4; ++j) {
        b.edge("sl" + num(j), a(2 * j), qv(j, 0));
        b.edge("sm" + num(j), a(2 * j + 1), qv(j, 2));
        b.edge("sr" + num(j), a(2 * j + 2), qv(j, 4));
    }

    std::vector<Step> oct;
    for (int k = 0; k < 8; ++k) oct.push_back({"om" + num(k), +1});
    b.face("O", std::move(oct));
    for (int j = 0; j < 4; ++j) {
        b.face("P" + num(2 * j), {{"om" + num(2 * j), +1},
                                  {"sm" + num(j), +1},
                                  {"in" + num(j) + "_1", -1},
                                  {"in" + num(j) + "_0", -1},
                                  {"sl" + num(j), -1}});
        b.face("P" + num(2 * j + 1), {{"om" + num(2 * j + 1), +1},
                                      {"sr" + num(j), +1},
                                      {"in" + num(j) + "_3", -1},
                                      {"in" + num(j) + "_2", -1},
                                      {"sm" + num(j), -1}});
    }
    for (int j = 0; j < 4; ++j)
        b.face("A" + num(j), {{"rr" + num((j + 3) % 4), +1},
                              {"ga" + num(j), +1},
                              {"rl" + num(j), +1},
                              {"gb" + num(j), +1}});
    for (int j = 0; j < 4; ++j) {
        std::vector<Step> bd = {{"rl" + num(j), +1}};
        for (int t = 0; t < 4; ++t) bd.push_back({"in" + num(j) + "_" + num(t), +1});
        bd.push_back({"rr" + num(j), +1});
        bd.push_back({"ob" + num(j), +1});
        b.face("B" + num(j), std::move(bd));
    }

    GeneratedComplex gc;
    gc.complex = b.build();
    gc.marks["ring"] =
        span_faces(gc.complex, {"A0", "B0", "A1", "B1", "A2", "B2", "A3", "B3"});
    gc.cells["hub"] = "O";
    return gc;
}

namespace {

std::string blow_vid(int n, int e, int k) {
    return "v:" + num(n) + "," + num(e) + ":" + num(k);
}
std::string blow_vedge(int n, int e, const char* name) {
    return "e:V:" + num(n) + "," + num(e) + ":" + name;
}
std::string blow_eaedge(int n, int e, const char* name) {
    return "e:Ea:" + num(n) + "," + num(e) + ":" + name;
}
std::string blow_ebedge(int n, int e, const char* name) {
    return "e:Eb:" + num(n) + "," + num(e) + ":" + name;
}

// Octagon-with-petals block attached along a closed ring walk.  rim_start
// partitions the walk into eight arcs; petal k covers arc k and shares its
// spokes with the neighbouring petals.
void attach_copy(Builder& b, const std::string& rho, const std::vector<Step>& walk,
                 const std::array<int, 8>& rim_start) {
    auto ov = [&](int k) { return "v:" + rho + ":o" + num(k % 8); };
    auto we = [&](int k) { return "e:" + rho + ":w" + num(k % 8); };
    auto se = [&](int k) { return "e:" + rho + ":s" + num(k % 8); };
    for (int k = 0; k < 8; ++k) b.vertex(ov(k));
    for (int k = 0; k < 8; ++k) b.edge(we(k), ov(k), ov(k + 1));
    for (int k = 0; k < 8; ++k) b.edge(se(k), ov(k), b.src_of(walk[rim_start[k]]));
    std::vector<Step> oct;
    for (int k = 0; k < 8; ++k) oct.push_back({we(k), +1});
    b.face("f:" + rho + ":oct", std::move(oct));
    for (int k = 0; k < 8; ++k) {
        const std::size_t lo = static_cast<std::size_t>(rim_start[k]);
        const std::size_t hi =
            (k == 7) ? walk.size() : static_cast<std::size_t>(rim_start[k + 1]);
        std::vector<Step> bd = {{we(k), +1}, {se(k + 1), +1}};
        for (std::size_t i = hi; i > lo; --i) bd.push_back(reversed(walk[i - 1]));
        bd.push_back({se(k), -1});
        b.face("f:" + rho + ":p" + num(k), std::move(bd));
    }
}

}  // namespace

GeneratedComplex gen_blowup(int m) {
    if (m < 1) throw std::invalid_argument("gen_blowup: m must be >= 1");
    Builder b;

    // Vertex cells: one octagon per Cayley vertex (n, e), alternating the
    // four incidence arcs aP, bP, aM, bM with spacers s1..s4.
    static const char* kVNames[8] = {"aP", "s1", "bP", "s2", "aM", "s3", "bM", "s4"};
    for (int n = -m; n <= m; ++n)
        for (int e = 0; e < 2; ++e) {
            for (int k = 1; k <= 8; ++k) b.vertex(blow_vid(n, e, k));
            for (int i = 0; i < 8; ++i)
                b.edge(blow_vedge(n, e, kVNames[i]), blow_vid(n, e, i + 1),
                       blow_vid(n, e, (i + 1) % 8 + 1));
            std::vector<Step> bd;
            for (int i = 0; i < 8; ++i) bd.push_back({blow_vedge(n, e, kVNames[i]), +1});
            b.face("f:V:" + num(n) + "," + num(e), std::move(bd));
        }
    // Edge cells for generator a: wrap the aP arc at (n, e) and the aM arc at
    // (n+1, e) with two three-edge sides.
    for (int n = -m; n <= m - 1; ++n)
        for (int e = 0; e < 2; ++e) {
            const std::string pre = "v:Ea:" + num(n) + "," + num(e) + ":";
            b.edge(blow_eaedge(n, e, "sa1"), blow_vid(n, e, 2), pre + "a1");
            b.edge(blow_eaedge(n, e, "sa2"), pre + "a1", pre + "a2");
            b.edge(blow_eaedge(n, e, "sa3"), pre + "a2", blow_vid(n + 1, e, 5));
            b.edge(blow_eaedge(n, e, "sb1"), blow_vid(n + 1, e, 6), pre + "b1");
            b.edge(blow_eaedge(n, e, "sb2"), pre + "b1", pre + "b2");
            b.edge(blow_eaedge(n, e, "sb3"), pre + "b2", blow_vid(n, e, 1));
            b.face("f:Ea:" + num(n) + "," + num(e),
                   {{blow_vedge(n, e, "aP"), +1},
                    {blow_eaedge(n, e, "sa1"), +1},
                    {blow_eaedge(n, e, "sa2"), +1},
                    {blow_eaedge(n, e, "sa3"), +1},
                    {blow_vedge(n + 1, e, "aM"), +1},
                    {blow_eaedge(n, e, "sb1"), +1},
                    {blow_eaedge(n, e, "sb2"), +1},
                    {blow_eaedge(n, e, "sb3"), +1}});
        }
    // Edge cells for generator b: from (n, e) to (n+1, 1-e).
    for (int n = -m; n <= m - 1; ++n)
        for (int e = 0; e < 2; ++e) {
            const int f = 1 - e;
            const std::string pre = "v:Eb:" + num(n) + "," + num(e) + ":";
            b.edge(blow_ebedge(n, e, "ta1"), blow_vid(n, e, 4), pre + "a1");
            b.edge(blow_ebedge(n, e, "ta2"), pre + "a1", pre + "a2");
            b.edge(blow_ebedge(n, e, "ta3"), pre + "a2", blow_vid(n + 1, f, 7));
            b.edge(blow_ebedge(n, e, "tb1"), blow_vid(n + 1, f, 8), pre + "b1");
            b.edge(blow_ebedge(n, e, "tb2"), pre + "b1", pre + "b2");
            b.edge(blow_ebedge(n, e, "tb3"), pre + "b2", blow_vid(n, e, 3));
            b.face("f:Eb:" + num(n) + "," + num(e),
                   {{blow_vedge(n, e, "bP"), +1},
                    {blow_ebedge(n, e, "ta1"), +1},
                    {blow_ebedge(n, e, "ta2"), +1},
                    {blow_ebedge(n, e, "ta3"), +1},
                    {blow_vedge(n + 1, f, "bM"), +1},
                    {blow_ebedge(n, e, "tb1"), +1},
                    {blow_ebedge(n, e, "tb2"), +1},
                    {blow_ebedge(n, e, "tb3"), +1}});
        }
    // Commutator rings a b a^-1 b^-1: cross Ea(n,e), Eb(n+1,e), then back
    // along Ea(n+1,1-e) and Eb(n,e), hopping a spacer inside each octagon.
    for (int n = -m; n <= m - 2; ++n)
        for (int e = 0; e < 2; ++e) {
            const int f = 1 - e;
            const std::vector<Step> walk = {{blow_vedge(n, e, "s1"), -1},
                                            {blow_eaedge(n, e, "sa1"), +1},
                                            {blow_eaedge(n, e, "sa2"), +1},
                                            {blow_eaedge(n, e, "sa3"), +1},
                                            {blow_vedge(n + 1, e, "s2"), -1},
                                            {blow_ebedge(n + 1, e, "ta1"), +1},
                                            {blow_ebedge(n + 1, e, "ta2"), +1},
                                            {blow_ebedge(n + 1, e, "ta3"), +1},
                                            {blow_vedge(n + 2, f, "s3"), -1},
                                            {blow_eaedge(n + 1, f, "sb1"), +1},
                                            {blow_eaedge(n + 1, f, "sb2"), +1},
                                            {blow_eaedge(n + 1, f, "sb3"), +1},
                                            {blow_vedge(n + 1, f, "s4"), -1},
                                            {blow_ebedge(n, e, "tb1"), +1},
                                            {blow_ebedge(n, e, "tb2"), +1},
                                            {blow_ebedge(n, e, "tb3"), +1}};
            attach_copy(b, "ca:" + num(n) + "," + num(e), walk, {0, 2, 4, 6, 8, 10, 12, 14});
        }
    // Doubled-edge rings a b^-1 a b^-1 between the two sheets; these cross
    // the vertex octagons at (n+1, e) along the short arc aM, s3, bM.
    for (int n = -m; n <= m - 1; ++n) {
        const std::vector<Step> walk = {{blow_vedge(n, 0, "s1"), -1},
                                        {blow_eaedge(n, 0, "sa1"), +1},
                                        {blow_eaedge(n, 0, "sa2"), +1},
                                        {blow_eaedge(n, 0, "sa3"), +1},
                                        {blow_vedge(n + 1, 0, "aM"), +1},
                                        {blow_vedge(n + 1, 0, "s3"), +1},
                                        {blow_vedge(n + 1, 0, "bM"), +1},
                                        {blow_ebedge(n, 1, "tb1"), +1},
                                        {blow_ebedge(n, 1, "tb2"), +1},
                                        {blow_ebedge(n, 1, "tb3"), +1},
                                        {blow_vedge(n, 1, "s1"), -1},
                                        {blow_eaedge(n, 1, "sa1"), +1},
                                        {blow_eaedge(n, 1, "sa2"), +1},
                                        {blow_eaedge(n, 1, "sa3"), +1},
                                        {blow_vedge(n + 1, 1, "aM"), +1},
                                        {blow_vedge(n + 1, 1, "s3"), +1},
                                        {blow_vedge(n + 1, 1, "bM"), +1},
                                        {blow_ebedge(n, 0, "tb1"), +1},
                                        {blow_ebedge(n, 0, "tb2"), +1},
                                        {blow_ebedge(n, 0, "tb3"), +1}};
        attach_copy(b, "cb:" + num(n), walk, {0, 2, 5, 8, 10, 12, 15, 18});
    }

    GeneratedComplex gc;
    gc.complex = b.build();
    gc.cells["R"] = "f:V:0,0";
    gc.cells["Rprime"] = "f:V:0,1";
    std::vector<std::string> central;
    for (int n = -(m - 1); n <= m - 1; ++n)
        for (int e = 0; e < 2; ++e) central.push_back("f:V:" + num(n) + "," + num(e));
    for (int n = -m + 1; n <= m - 2; ++n)
        for (int e = 0; e < 2; ++e) {
            central.push_back("f:Ea:" + num(n) + "," + num(e));
            central.push_back("f:Eb:" + num(n) + "," + num(e));
        }
    gc.marks["central"] = span_faces(gc.complex, central);
    return gc;
}

DiscDiagram make_hex_diagram(const GeneratedComplex& gc) {
    const CellComplex& x = gc.complex;
    const auto& uv = gc.geometry.vertex_uv;

    DiscDiagram d;
    d.complex = x;
    for (const auto& v : x.vertices()) d.map.vertices[v] = v;
    for (const auto& e : x.edges()) d.map.edges[e.id] = e.id;
    for (const auto& f : x.faces2()) d.map.faces[f.id] = f.id;

    auto pos_of = [&](const std::string& v) -> const std::pair<long long, long long>& {
        auto it = uv.find(v);
        if (it == uv.end())
            throw std::invalid_argument("make_hex_diagram: no plane coordinates for vertex " + v);
        return it->second;
    };

    // Rotation: sort each vertex's emanating darts counterclockwise by the
    // exact integer direction to the dart's head (half-plane, then cross
    // product), so no floating point enters the diagram.
    std::map<std::string, std::vector<Step>> at;
    for (const auto& e : x.edges()) {
        at[e.src].push_back({e.id, +1});
        at[e.dst].push_back({e.id, -1});
    }
    for (const auto& v : x.vertices()) {
        std::vector<Step> darts = at.count(v) ? at[v] : std::vector<Step>{};
        const auto& origin = darts.empty() ? std::pair<long long, long long>{0, 0} : pos_of(v);
        auto direction = [&](const Step& s) -> std::pair<long long, long long> {
            const auto& head = pos_of(x.step_dst(s));
            return {head.first - origin.first, head.second - origin.second};
        };
        std::sort(darts.begin(), darts.end(), [&](const Step& s1, const Step& s2) {
            const auto p = direction(s1), q = direction(s2);
            const int hp = (p.second < 0 || (p.second == 0 && p.first < 0)) ? 1 : 0;
            const int hq = (q.second < 0 || (q.second == 0 && q.first < 0)) ? 1 : 0;
            if (hp != hq) return hp < hq;
            const long long cr = p.first * q.second - p.second * q.first;
            if (cr != 0) return cr > 0;
            return s1 < s2;  // collinear duplicates cannot occur in a patch
        });
        d.rotation[v] = std::move(darts);
    }

    // Trace the rotation faces; the one orbit that is not a 2-cell boundary
    // is the boundary walk of the patch.
    std::map<std::pair<std::string, int>, std::pair<std::string, int>> slot;
    for (const auto& [v, rot] : d.rotation)
        for (std::size_t i = 0; i < rot.size(); ++i)
            slot[{rot[i].edge, rot[i].dir}] = {v, static_cast<int>(i)};
    auto next_dart = [&](const Step& s) -> Step {
        const Step r = reversed(s);
        const auto& [v, i] = slot.at({r.edge, r.dir});
        const auto& rot = d.rotation.at(v);
        return rot[(static_cast<std::size_t>(i) + 1) % rot.size()];
    };

    std::set<std::pair<std::string, int>> seen;
    std::map<std::vector<Step>, int> expected;
    for (const auto& f : x.faces2()) ++expected[cycle_key(f.boundary, ReversalPolicy::Agnostic)];
    std::vector<std::vector<Step>> leftovers;
    for (const auto& e : x.edges())
        for (int dir : {+1, -1}) {
            const Step start{e.id, dir};
            if (seen.count({start.edge, start.dir})) continue;
            std::vector<Step> orbit;
            Step cur = start;
            do {
                orbit.push_back(cur);
                seen.insert({cur.edge, cur.dir});
                cur = next_dart(cur);
            } while (!(cur == start));
            auto it = expected.find(cycle_key(orbit, ReversalPolicy::Agnostic));
            if (it != expected.end() && it->second > 0)
                --(it->second);
            else
                leftovers.push_back(std::move(orbit));
        }
    if (leftovers.size() != 1)
        throw std::invalid_argument("make_hex_diagram: patch does not have a single boundary cycle");
    d.boundary = canonical_rotation(leftovers[0]);
    return d;
}

}  // namespace scw
