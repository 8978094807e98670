// Nerve graphs, link largeness, the boundary/interior split, honeycomb patch
// recognition, and flat pullbacks.  The regular tiling balls double as known
// answers: their nerve must coincide with the triangular-lattice skeleton of
// the same radius, node for node.
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scw/complex.hpp"
#include "scw/generators.hpp"
#include "scw/metrics.hpp"
#include "scw/nerve.hpp"
#include "support/fixtures.hpp"

namespace {

using namespace scw;

// Hand-built abstract face graph (all nodes flagged as 2-cells).
FaceGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    FaceGraph g;
    for (int i = 0; i < n; ++i) {
        g.ids.push_back("n" + std::to_string(i));
        g.index.emplace(g.ids.back(), i);
        g.is_two_cell.push_back(true);
    }
    std::vector<std::set<int>> nb(n);
    for (const auto& [a, b] : edges) {
        nb[a].insert(b);
        nb[b].insert(a);
    }
    for (int i = 0; i < n; ++i) g.adj.emplace_back(nb[i].begin(), nb[i].end());
    return g;
}

// Wheel: node 0 adjacent to a ring 1..k with consecutive ring edges.
FaceGraph wheel(int k) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= k; ++i) {
        es.push_back({0, i});
        es.push_back({i, i % k + 1});
    }
    return make_graph(k + 1, es);
}

std::set<std::string> id_set(const std::vector<std::string>& v) {
    return std::set<std::string>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("tiling ball nerve equals the triangular-lattice skeleton") {
    for (int r : {1, 2}) {
        CAPTURE(r);
        const NerveGraph n = nerve(gen_hex(r).complex);
        const FaceGraph tri = tri_skeleton(r);
        const FaceGraph back = face_graph_from_nerve(n);
        // Same ids in the same deterministic order, same adjacency.
        CHECK(back.ids == tri.ids);
        CHECK(back.adj == tri.adj);
        // Serialized edge list is sorted with a < b and duplicate-free.
        for (const auto& [a, b] : n.edges) CHECK(a < b);
        CHECK(std::is_sorted(n.edges.begin(), n.edges.end()));
        CHECK(std::adjacent_find(n.edges.begin(), n.edges.end()) == n.edges.end());
    }
}

TEST_CASE("edge subdivision does not change the nerve") {
    const NerveGraph plain = nerve(gen_hex(2).complex);
    const NerveGraph fine = nerve(gen_hex(2, 2).complex);
    CHECK(plain.nodes == fine.nodes);
    CHECK(plain.edges == fine.edges);
}

TEST_CASE("triangular-lattice skeleton sizes") {
    const FaceGraph t1 = tri_skeleton(1);
    CHECK(t1.ids.size() == 7);
    std::size_t deg1 = 0;
    for (const auto& a : t1.adj) deg1 += a.size();
    CHECK(deg1 == 2 * 12);

    const FaceGraph t2 = tri_skeleton(2);
    CHECK(t2.ids.size() == 19);
    std::size_t deg2 = 0;
    for (const auto& a : t2.adj) deg2 += a.size();
    CHECK(deg2 == 2 * 42);
}

TEST_CASE("link largeness: induced short cycles are found, C6 links pass") {
    const LinkReport bad4 = link_six_large_node(wheel(4), 0);
    CHECK_FALSE(bad4.six_large);
    CHECK(bad4.node == "n0");
    CHECK(bad4.cycle.size() == 4);

    const LinkReport bad5 = link_six_large_node(wheel(5), 0);
    CHECK_FALSE(bad5.six_large);
    CHECK(bad5.cycle.size() == 5);

    CHECK(link_six_large_node(wheel(6), 0).six_large);
    CHECK(link_six_large(wheel(6)).six_large);

    // A long chord through the C6 link cuts it into two induced C4s.
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= 6; ++i) {
        es.push_back({0, i});
        es.push_back({i, i % 6 + 1});
    }
    es.push_back({1, 4});
    CHECK_FALSE(link_six_large_node(make_graph(7, es), 0).six_large);
}

TEST_CASE("degree cap aborts, but a genuine witness beats an abort") {
    // Star with 70 leaves: the hub's link has 70 nodes, over the cap.
    std::vector<std::pair<int, int>> star;
    for (int i = 1; i <= 70; ++i) star.push_back({0, i});
    const FaceGraph s = make_graph(71, star);
    const LinkReport cap = link_six_large_node(s, 0);
    CHECK(cap.aborted);
    CHECK_FALSE(cap.six_large);
    CHECK_FALSE(cap.abort_detail.empty());
    // Raising the cap resolves it (a star link has no edges at all).
    CHECK(link_six_large_node(s, 0, 128).six_large);

    // Disjoint union of the star and a C4 wheel: aggregation reports the
    // induced C4, not the abort.
    std::vector<std::pair<int, int>> both = star;
    for (int i = 1; i <= 4; ++i) {
        both.push_back({71, 71 + i});
        both.push_back({71 + i, 71 + i % 4 + 1});
    }
    const LinkReport agg = link_six_large(make_graph(76, both));
    CHECK_FALSE(agg.six_large);
    CHECK_FALSE(agg.aborted);
    CHECK(agg.cycle.size() == 4);
}

TEST_CASE("systolic report: tiling balls are clean with the expected interior") {
    const GeneratedComplex gc = gen_hex(2);
    const FaceGraph g = build_face_graph(gc.complex);
    const SystolicReport rep = local_systolic_report(gc.complex, g);
    CHECK(rep.ok);
    CHECK(rep.link.six_large);
    CHECK(rep.boundary_faces.size() == 12);  // the outer ring has free sides
    CHECK(id_set(rep.interior_faces) == std::set<std::string>{"f:0,0"});

    const GeneratedComplex g3 = gen_hex(3);
    const SystolicReport rep3 = local_systolic_report(g3.complex, build_face_graph(g3.complex));
    CHECK(rep3.ok);
    CHECK(rep3.boundary_faces.size() == 18);
    CHECK(id_set(rep3.interior_faces) == id_set(fixtures::hex_ball_faces(g3, 0, 0, 1)));
}

TEST_CASE("honeycomb patches: balls, bands, and other shapes") {
    const GeneratedComplex gc = gen_hex(2);
    const CellComplex& x = gc.complex;

    std::vector<std::string> all;
    for (const Face2& f : x.faces2()) all.push_back(f.id);
    const PatchReport ball2 = is_honeycomb_patch(x, all);
    CHECK(ball2.ok);
    CHECK(ball2.honeycomb);
    CHECK(ball2.shape == "ball");
    CHECK(ball2.radius == 2);
    CHECK(ball2.coords.size() == 19);
    CHECK(ball2.missing.empty());

    const PatchReport ball1 = is_honeycomb_patch(x, fixtures::hex_ball_faces(gc, 0, 0, 1));
    CHECK(ball1.ok);
    CHECK(ball1.radius == 1);

    // Three cells around a corner: honeycomb but neither ball nor band.
    const GeneratedComplex tri = fixtures::triangle_patch();
    std::vector<std::string> tri_faces;
    for (const Face2& f : tri.complex.faces2()) tri_faces.push_back(f.id);
    const PatchReport ptri = is_honeycomb_patch(tri.complex, tri_faces);
    CHECK(ptri.honeycomb);
    CHECK_FALSE(ptri.ok);
    CHECK(ptri.shape == "other");

    // Rectangular strips are recognized as bands.
    for (const auto& [l, w] : std::vector<std::pair<int, int>>{{5, 1}, {4, 2}}) {
        CAPTURE(l);
        CAPTURE(w);
        const GeneratedComplex band = gen_band(l, w);
        std::vector<std::string> bf;
        for (const Face2& f : band.complex.faces2()) bf.push_back(f.id);
        const PatchReport pb = is_honeycomb_patch(band.complex, bf);
        CHECK(pb.honeycomb);
        CHECK(pb.shape == "band");
        CHECK_FALSE(pb.ok);
    }

    // A lone hexagon is a radius-0 ball; a lone square is not a hexagon.
    const PatchReport lone = is_honeycomb_patch(gen_petal(3).complex, {"R"});
    CHECK(lone.ok);
    CHECK(lone.shape == "ball");
    CHECK(lone.radius == 0);
    const PatchReport square = is_honeycomb_patch(gen_petal(2).complex, {"R"});
    CHECK_FALSE(square.ok);
    CHECK_FALSE(square.honeycomb);

    // Octagon + wedge from the thick square: not a tiling pattern.
    const GeneratedComplex ts = gen_thick_square();
    const PatchReport pts = is_honeycomb_patch(ts.complex, {"O", "P0"});
    CHECK_FALSE(pts.honeycomb);
}

TEST_CASE("maximal patch discovery") {
    const GeneratedComplex gc = gen_hex(2);
    const auto patches = find_honeycomb_patches(gc.complex);
    REQUIRE(patches.size() == 1);
    CHECK(patches[0].size() == 19);

    // Two balls glued along one cell: the seam breaks the tiling pattern, so
    // exactly the two original balls survive as maximal patches.
    const GeneratedComplex gp = fixtures::glue_hex_pair();
    const auto two = find_honeycomb_patches(gp.complex);
    REQUIRE(two.size() == 2);
    CHECK(id_set(two[0]) != id_set(two[1]));
    for (const auto& p : two) {
        CHECK(p.size() == 37);
        CHECK(p.end() != std::find(p.begin(), p.end(), gp.cells.at("shared")));
        const PatchReport rep = is_honeycomb_patch(gp.complex, p);
        CHECK(rep.ok);
        CHECK(rep.radius == 3);
    }
}

TEST_CASE("flat pullback: tiling regions come back as spans, seams do not") {
    const GeneratedComplex gc = gen_hex(2);
    const CellComplex& x = gc.complex;
    const FaceGraph g = build_face_graph(x);

    std::vector<std::string> all;
    for (const Face2& f : x.faces2()) all.push_back(f.id);
    const FlatPullback whole = pullback_flat(x, g, all);
    CHECK(whole.ok);
    CHECK(whole.patch == span_faces(x, all));

    const auto b1 = fixtures::hex_ball_faces(gc, 0, 0, 1);
    const FlatPullback small = pullback_flat(x, g, b1);
    CHECK(small.ok);
    CHECK(small.patch == span_faces(x, b1));

    // The glued fixture's seam wheel is nerve-flat but its lattice-adjacent
    // cells from opposite copies share only a vertex, so the pullback fails.
    const GeneratedComplex gp = fixtures::glue_hex_pair();
    const FaceGraph gg = build_face_graph(gp.complex);
    const std::string shared = gp.cells.at("shared");
    std::vector<std::string> wheel_nodes{shared};
    const int sn = gg.node(shared);
    for (int nb : gg.adj[sn]) wheel_nodes.push_back(gg.ids[nb]);
    REQUIRE(wheel_nodes.size() == 7);
    const FlatPullback seam = pullback_flat(gp.complex, gg, wheel_nodes);
    CHECK_FALSE(seam.ok);
    CHECK_FALSE(seam.reason.empty());

    // Unknown node ids are rejected.
    CHECK_FALSE(pullback_flat(x, g, {"no-such-cell"}).ok);
}
