// Walls: deterministic closure growth, the 0-or-2-opposite law, halfspace
// splitting, carrier splitting, and straight/bent wall segments.  The
// 0-or-2-opposite law is re-checked here directly from positions_opposite so
// wall construction and wall classification cannot share a bug.
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "scw/complex.hpp"
#include "scw/generators.hpp"
#include "scw/metrics.hpp"
#include "scw/pieces.hpp"
#include "scw/walls.hpp"
#include "support/fixtures.hpp"

namespace {

using namespace scw;

// Independent statement of the wall law: every 2-cell uses no wall edge or
// exactly two at opposite boundary positions.
bool wall_law_holds(const CellComplex& x, const Wall& w) {
    const std::set<std::string> wset(w.edges.begin(), w.edges.end());
    for (const Face2& f : x.faces2()) {
        std::vector<int> hits;
        for (int i = 0; i < static_cast<int>(f.boundary.size()); ++i)
            if (wset.count(f.boundary[i].edge)) hits.push_back(i);
        if (hits.empty()) continue;
        if (hits.size() != 2) return false;
        if (!positions_opposite(x, f.id, hits[0], hits[1])) return false;
    }
    return true;
}

std::string hex_id(int q, int r) {
    return "f:" + std::to_string(q) + "," + std::to_string(r);
}

// Edge of the tiling cell (q, r) on its side k (edges are recorded on the
// boundary in side order 0..5).
std::string side_edge(const CellComplex& x, int q, int r, int k) {
    return x.face2(hex_id(q, r)).boundary[k].edge;
}

}  // namespace

TEST_CASE("flower wall: seed grows through bigon and core to a clean wall") {
    const CellComplex x = gen_petal(3).complex;
    const Wall w = extend_to_wall(x, {"s1"});
    CHECK(w.kind == "wall");
    CHECK(w.conflicts.empty());
    CHECK(w.edges == std::vector<std::string>{"f1", "f4", "s1", "s4"});
    CHECK(wall_law_holds(x, w));
    // Deterministic growth order: least forcing cell first.
    REQUIRE(w.log.size() == 3);
    CHECK(w.log[0].face == "B1");
    CHECK(w.log[0].chosen == "f1");
    CHECK(w.log[1].face == "R");
    CHECK(w.log[1].chosen == "s4");
    CHECK(w.log[2].face == "B4");
    CHECK(w.log[2].chosen == "f4");

    const Subcomplex carrier = wall_carrier(x, w);
    CHECK(carrier.faces == std::set<std::string>{"B1", "B4", "R"});

    const HalfspaceResult hs = halfspaces(x, w);
    CHECK(hs.ok);
    CHECK(hs.ncomponents == 2);
    CHECK(hs.invariants_ok);
    // The two sides carry the unused bigons, three vertices each.
    std::set<std::set<std::string>> sides;
    for (const auto& c : hs.components) sides.insert(c.faces);
    CHECK(sides == std::set<std::set<std::string>>{{"B2", "B3"}, {"B5", "B6"}});
}

TEST_CASE("tiling wall: antipodal seed crosses the ball in a straight carrier") {
    const CellComplex x = gen_hex(2).complex;
    const FaceGraph g = build_face_graph(x);
    // Opposite sides of the centre cell; sides 0 and 3 head for (1,-1) and
    // (-1,1), so the closure marches to the boundary in both directions.
    const Wall w = extend_to_wall(x, {side_edge(x, 0, 0, 0), side_edge(x, 0, 0, 3)});
    CHECK(w.kind == "wall");
    CHECK(w.conflicts.empty());
    CHECK(w.edges.size() == 6);
    CHECK(wall_law_holds(x, w));

    const Subcomplex carrier = wall_carrier(x, w);
    CHECK(carrier.faces == std::set<std::string>{hex_id(-2, 2), hex_id(-1, 1),
                                                 hex_id(0, 0), hex_id(1, -1),
                                                 hex_id(2, -2)});
    CHECK(is_face_convex(x, g, carrier));

    const HalfspaceResult hs = halfspaces(x, w);
    CHECK(hs.ok);
    CHECK(hs.invariants_ok);
    REQUIRE(hs.ncomponents == 2);
    CHECK(hs.components[0].faces.size() == 7);
    CHECK(hs.components[1].faces.size() == 7);
    CHECK(is_face_convex(x, g, hs.left));
    CHECK(is_face_convex(x, g, hs.right));
}

TEST_CASE("a seed meeting one cell in a non-opposite pair yields a semi-wall") {
    const CellComplex x = gen_hex(2).complex;
    const Wall w = extend_to_wall(x, {side_edge(x, 0, 0, 0), side_edge(x, 0, 0, 1)});
    CHECK(w.kind == "semi-wall");
    CHECK_FALSE(wall_law_holds(x, w));
}

TEST_CASE("wall enumeration contains the canonical closure and keeps law/kind in sync") {
    const CellComplex x = gen_hex(2).complex;
    const std::vector<std::string> seed{side_edge(x, 0, 0, 0), side_edge(x, 0, 0, 3)};
    const Wall canonical = extend_to_wall(x, seed);
    const std::vector<Wall> all = enumerate_walls(x, seed);
    REQUIRE_FALSE(all.empty());
    std::set<std::vector<std::string>> edge_sets;
    bool saw_canonical = false;
    for (const Wall& w : all) {
        CHECK(edge_sets.insert(w.edges).second);  // deduplicated
        for (const std::string& e : seed)
            CHECK(std::find(w.edges.begin(), w.edges.end(), e) != w.edges.end());
        CHECK((w.kind == "wall") == (w.conflicts.empty() && wall_law_holds(x, w)));
        saw_canonical = saw_canonical || w.edges == canonical.edges;
    }
    CHECK(saw_canonical);
}

TEST_CASE("carrier split along one opposite pair partitions the carrier") {
    const CellComplex x = gen_petal(3).complex;
    const Wall w = extend_to_wall(x, {"s1"});
    const Subcomplex carrier = wall_carrier(x, w);
    const WallSplitResult sp = wall_split(x, w, carrier, "s1", "s4");
    // Only the core uses both cut edges.
    CHECK(sp.removed.faces == std::set<std::string>{"R"});

    // Partition: components and removed cells are disjoint and cover carrier.
    Subcomplex covered = sp.removed;
    for (const Subcomplex& c : sp.components) {
        for (const auto& v : c.vertices) {
            CHECK_FALSE(covered.contains_vertex(v));
        }
        for (const auto& e : c.edges) {
            CHECK_FALSE(covered.contains_edge(e));
        }
        for (const auto& f : c.faces) {
            CHECK_FALSE(covered.contains_face(f));
        }
        covered = subcomplex_union(covered, c);
    }
    CHECK(covered == carrier);

    // The two bigons land in different components.
    int with_b1 = -1, with_b4 = -1;
    for (int i = 0; i < static_cast<int>(sp.components.size()); ++i) {
        if (sp.components[i].contains_face("B1")) with_b1 = i;
        if (sp.components[i].contains_face("B4")) with_b4 = i;
    }
    CHECK(with_b1 >= 0);
    CHECK(with_b4 >= 0);
    CHECK(with_b1 != with_b4);
}

TEST_CASE("straight wall segments: interval equality and link opposition") {
    const CellComplex x = gen_hex(2).complex;
    const FaceGraph g = build_face_graph(x);
    const std::vector<std::string> row{hex_id(-1, 0), hex_id(0, 0), hex_id(1, 0)};
    const auto seg = segment_from_faces(x, g, row);
    REQUIRE(seg.has_value());
    CHECK(seg->faces == row);
    CHECK(seg->links.size() == 2);
    CHECK(verify_wall_segment(x, g, *seg).ok);

    // Longer row across the whole ball.
    const std::vector<std::string> long_row{hex_id(-2, 0), hex_id(-1, 0), hex_id(0, 0),
                                            hex_id(1, 0), hex_id(2, 0)};
    const auto seg5 = segment_from_faces(x, g, long_row);
    REQUIRE(seg5.has_value());
    CHECK(verify_wall_segment(x, g, *seg5).ok);

    // Non-adjacent consecutive cells have no link at all.
    CHECK_FALSE(segment_from_faces(x, g, {hex_id(-1, 0), hex_id(1, 0)}).has_value());
    // A bent face sequence is not a straight segment: endpoints are closer
    // than the sequence is long.
    CHECK_FALSE(
        segment_from_faces(x, g, {hex_id(0, 0), hex_id(1, -1), hex_id(0, -1)}).has_value());
}

TEST_CASE("bent segments: wide bends pass, sharp bends fail") {
    const CellComplex x = gen_hex(2).complex;
    const FaceGraph g = build_face_graph(x);
    const auto arm_a =
        segment_from_faces(x, g, {hex_id(2, -2), hex_id(1, -1), hex_id(0, 0)});
    const auto arm_b =
        segment_from_faces(x, g, {hex_id(0, 0), hex_id(-1, 0), hex_id(-2, 0)});
    REQUIRE(arm_a.has_value());
    REQUIRE(arm_b.has_value());
    const SegmentCheck wide = verify_bent_segment(x, g, *arm_a, *arm_b);
    CHECK(wide.ok);

    // Turning one step sharper makes the flanking cells adjacent.
    const auto arm_c =
        segment_from_faces(x, g, {hex_id(0, 0), hex_id(0, -1), hex_id(0, -2)});
    REQUIRE(arm_c.has_value());
    const SegmentCheck sharp = verify_bent_segment(x, g, *arm_a, *arm_c);
    CHECK_FALSE(sharp.ok);
    CHECK(sharp.reason == "cells flanking the bend intersect");

    // Arms must meet exactly in the shared bend cell.
    const SegmentCheck disjoint = verify_bent_segment(x, g, *arm_b, *arm_c);
    CHECK_FALSE(disjoint.ok);
}
