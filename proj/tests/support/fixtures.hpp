// Shared hand-built fixtures for the test-suite.
//
// Small complexes with fully understood structure: a lone square, two
// squares along a shared edge, a three-hex triangle patch, two hex balls
// glued across one boundary hexagon, and a deliberately foldable two-cell
// diagram.  Anything whose expected behaviour was worked out by hand lives
// here so every test file sees the same construction.

#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "scw/complex.hpp"
#include "scw/diagrams.hpp"
#include "scw/generators.hpp"

namespace scw::fixtures {

/// One square 2-cell; its edges lie on no piece at all.
inline CellComplex square_ambient() {
    std::vector<std::string> vs{"v0", "v1", "v2", "v3"};
    std::vector<EdgeRec> es{{"e1", "v0", "v1"}, {"e2", "v1", "v2"},
                            {"e3", "v2", "v3"}, {"e4", "v3", "v0"}};
    std::vector<Face2> fs{{"S", {{"e1", 1}, {"e2", 1}, {"e3", 1}, {"e4", 1}}}};
    return CellComplex(vs, es, fs);
}

/// Two squares sharing exactly the edge "s"; the shared edge is the unique
/// piece (up to direction), every other edge lies on no piece.
inline CellComplex two_squares() {
    std::vector<std::string> vs{"x0", "x1", "x2", "x3", "y0", "y1"};
    std::vector<EdgeRec> es{{"A", "x0", "x1"}, {"s", "x1", "x2"}, {"B", "x2", "x3"},
                            {"C", "x3", "x0"}, {"E", "x2", "y1"}, {"F", "y1", "y0"},
                            {"G", "y0", "x1"}};
    std::vector<Face2> fs{{"Q1", {{"A", 1}, {"s", 1}, {"B", 1}, {"C", 1}}},
                         {"Q2", {{"s", 1}, {"E", 1}, {"F", 1}, {"G", 1}}}};
    return CellComplex(vs, es, fs);
}

/// Three tiling hexagons around a common corner: cells (0,0), (1,0), (0,1).
inline GeneratedComplex triangle_patch() {
    return gen_hex_patch({{0, 0}, {1, 0}, {0, 1}});
}

/// Face ids of the tiling cells within hex-distance rad of (cq, cr) that are
/// present in gc.  Hex distance of an axial offset (dq, dr) is
/// (|dq| + |dr| + |dq+dr|) / 2.
inline std::vector<std::string> hex_ball_faces(const GeneratedComplex& gc, int cq, int cr,
                                               int rad) {
    std::vector<std::string> out;
    for (int dq = -rad; dq <= rad; ++dq)
        for (int dr = -rad; dr <= rad; ++dr) {
            if ((std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2 > rad) continue;
            std::string id =
                "f:" + std::to_string(cq + dq) + "," + std::to_string(cr + dr);
            if (gc.complex.has_face2(id)) out.push_back(id);
        }
    return out;
}

/// Two radius-3 hex balls glued along one boundary hexagon, the second ball
/// rotated half a turn so its occupied sides land on the first ball's free
/// sides.  Every vertex of the shared cell then lies on exactly three
/// 2-cells, but second-ring cells from the two balls meet in single vertices
/// without sharing a side, so no honeycomb patch crosses the seam.  Marks
/// "A"/"B" are the two balls (each containing the shared cell); cell
/// "shared" is the glued hexagon.
///
/// Documented coarse-overlap bounds: cells within distance r of both balls
/// form a neighbourhood of the glued cell, so the overlap diameter is at
/// most 0, 2, 4 at r = 0, 1, 2 (exactly the glued cell at r = 0; at larger
/// r, two corner sectors joined there, any two members linked through it).
inline GeneratedComplex glue_hex_pair() {
    GeneratedComplex a = gen_hex(3);
    GeneratedComplex b = gen_hex(3);
    const std::string corner = "f:3,0";
    const Face2& ca = a.complex.face2(corner);
    const Face2& cb = b.complex.face2(corner);

    // Identify side k of the b-copy's corner cell with side k+3 of the
    // a-copy's, matching the walk directions (side k starts at corner k and
    // both boundaries run side 0..5 in order).
    std::map<std::string, std::string> vmap, emap;
    std::map<std::string, int> eflip;
    for (int k = 0; k < 6; ++k) {
        const Step sb = cb.boundary[k];
        const Step sa = ca.boundary[(k + 3) % 6];
        vmap[b.complex.step_src(sb)] = a.complex.step_src(sa);
        emap[sb.edge] = sa.edge;
        eflip[sb.edge] = sb.dir * sa.dir;
    }

    auto bname = [](const std::string& id) { return "B:" + id; };
    std::vector<std::string> vs = a.complex.vertices();
    for (const std::string& v : b.complex.vertices())
        if (!vmap.count(v)) {
            vmap[v] = bname(v);
            vs.push_back(vmap[v]);
        }
    std::vector<EdgeRec> es = a.complex.edges();
    for (const EdgeRec& e : b.complex.edges()) {
        if (emap.count(e.id)) continue;  // identified with an a-edge
        emap[e.id] = bname(e.id);
        eflip[e.id] = 1;
        es.push_back(EdgeRec{emap[e.id], vmap[e.src], vmap[e.dst]});
    }
    std::vector<Face2> fs = a.complex.faces2();
    std::vector<std::string> bfaces{corner};
    for (const Face2& f : b.complex.faces2()) {
        if (f.id == corner) continue;
        Face2 g{bname(f.id), {}};
        for (const Step& st : f.boundary)
            g.boundary.push_back(Step{emap[st.edge], st.dir * eflip[st.edge]});
        fs.push_back(g);
        bfaces.push_back(g.id);
    }

    GeneratedComplex out;
    out.complex = CellComplex(vs, es, fs);
    std::vector<std::string> afaces;
    for (const Face2& f : a.complex.faces2()) afaces.push_back(f.id);
    out.marks["A"] = span_faces(out.complex, afaces);
    out.marks["B"] = span_faces(out.complex, bfaces);
    out.cells["shared"] = corner;
    return out;
}

/// Two diagram squares sharing one edge, both mapped onto the single ambient
/// square with the shared edge reading the same way around both cells.  The
/// shared edge is an overlap inside the diagram whose image admits only one
/// ambient reading, so the diagram is not reduced and the pair is
/// cancellable.
inline DiscDiagram folded_pair_diagram() {
    DiscDiagram d;
    std::vector<std::string> vs{"u0", "u1", "a1", "a2", "b1", "b2"};
    std::vector<EdgeRec> es{{"eh", "u0", "u1"}, {"p2", "u1", "a1"}, {"p3", "a1", "a2"},
                            {"p4", "a2", "u0"}, {"q2", "u1", "b1"}, {"q3", "b1", "b2"},
                            {"q4", "b2", "u0"}};
    std::vector<Face2> fs{{"R1", {{"eh", 1}, {"p2", 1}, {"p3", 1}, {"p4", 1}}},
                         {"R2", {{"eh", 1}, {"q2", 1}, {"q3", 1}, {"q4", 1}}}};
    d.complex = CellComplex(vs, es, fs);
    // Planar positions: u0 = (0,0), u1 = (1,0), a-arc above, b-arc below.
    d.rotation["u0"] = {{"eh", 1}, {"p4", -1}, {"q4", -1}};
    d.rotation["u1"] = {{"p2", 1}, {"eh", -1}, {"q2", 1}};
    d.rotation["a1"] = {{"p3", 1}, {"p2", -1}};
    d.rotation["a2"] = {{"p3", -1}, {"p4", 1}};
    d.rotation["b1"] = {{"q2", -1}, {"q3", 1}};
    d.rotation["b2"] = {{"q3", -1}, {"q4", 1}};
    d.boundary = {{"p2", 1}, {"p3", 1}, {"p4", 1}, {"q4", -1}, {"q3", -1}, {"q2", -1}};
    d.map.vertices = {{"u0", "v0"}, {"u1", "v1"}, {"a1", "v2"}, {"a2", "v3"},
                      {"b1", "v2"}, {"b2", "v3"}};
    d.map.edges = {{"eh", "e1"}, {"p2", "e2"}, {"p3", "e3"}, {"p4", "e4"},
                   {"q2", "e2"}, {"q3", "e3"}, {"q4", "e4"}};
    d.map.faces = {{"R1", "S"}, {"R2", "S"}};
    return d;
}

/// The subcomplex as a standalone complex (cells filtered, order preserved).
/// Used to compare a subcomplex's intrinsic face metric with the ambient one.
inline CellComplex restrict_to(const CellComplex& x, const Subcomplex& sub) {
    std::vector<std::string> vs;
    std::vector<EdgeRec> es;
    std::vector<Face2> fs;
    for (const auto& v : x.vertices())
        if (sub.contains_vertex(v)) vs.push_back(v);
    for (const auto& e : x.edges())
        if (sub.contains_edge(e.id)) es.push_back(e);
    for (const auto& f : x.faces2())
        if (sub.contains_face(f.id)) fs.push_back(f);
    return CellComplex(vs, es, fs);
}

}  // namespace scw::fixtures
