// Acceptance battery: nine end-to-end scenarios over the generator corpus,
// each with its own wall-clock budget.  Invoke with a gate number (1..9) to
// run one, or with no argument for all.  Every gate prints exactly one
// verdict line; the process exits 0 only if each requested gate passes
// inside budget.
//
// Where a scenario needs an independent reference (geodesic enumeration,
// piece-length decomposition), it uses the naive oracles from
// support/oracles.hpp rather than the library code under test.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "scw/complex.hpp"
#include "scw/diagrams.hpp"
#include "scw/generators.hpp"
#include "scw/metrics.hpp"
#include "scw/nerve.hpp"
#include "scw/parallel.hpp"
#include "scw/pieces.hpp"
#include "scw/walls.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using namespace scw;

// First failed expectation wins; later ones are cheap no-ops.
struct Check {
    bool ok = true;
    std::string why;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

int hexdist(int aq, int ar, int bq, int br) {
    const int dq = bq - aq, dr = br - ar;
    return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

// Ambient-metric diameter of a face set: max pairwise distance between
// members.  Unbounded members (unreachable pairs) fail the caller's bound.
FaceDist set_diameter(const FaceGraph& g, const std::set<std::string>& faces) {
    FaceDist dia = FaceDist::of(0);
    std::vector<int> nodes;
    for (const auto& id : faces) nodes.push_back(g.node(id));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::vector<int> dist = bfs_from(g, {nodes[i]});
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (dist[nodes[j]] < 0) return FaceDist::bot();
            const FaceDist d = FaceDist::of(dist[nodes[j]]);
            if (dia < d) dia = d;
        }
    }
    return dia;
}

// Orders a face set that forms a simple path in the face graph; empty result
// when it is not a path.
std::vector<std::string> order_as_path(const FaceGraph& g, const std::set<std::string>& faces) {
    std::map<std::string, std::vector<std::string>> nb;
    for (const auto& id : faces) {
        const int n = g.node(id);
        if (n < 0) return {};
        for (int m : g.adj[n])
            if (faces.count(g.ids[m])) nb[id].push_back(g.ids[m]);
    }
    if (faces.size() == 1) return {*faces.begin()};
    std::vector<std::string> ends;
    for (const auto& [id, ns] : nb) {
        if (ns.size() > 2) return {};
        if (ns.size() == 1) ends.push_back(id);
    }
    if (ends.size() != 2) return {};
    std::vector<std::string> order{std::min(ends[0], ends[1])};
    std::set<std::string> seen{order.front()};
    while (order.size() < faces.size()) {
        const std::string& cur = order.back();
        std::string next;
        for (const auto& cand : nb[cur])
            if (!seen.count(cand)) next = cand;
        if (next.empty()) return {};
        order.push_back(next);
        seen.insert(next);
    }
    return order;
}

std::vector<Step> boundary_subpath(const Face2& f, int start, int dir, int len) {
    std::vector<Step> p;
    p.reserve(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) p.push_back(oracle::cyclic_reading(f, start, dir, t));
    return p;
}

// ---------------------------------------------------------------------------

bool gate1(std::string& why) {
    Check c;
    const GeneratedComplex gc = gen_blowup(2);
    const FaceGraph g = build_face_graph(gc.complex);
    const FaceDist d = face_distance(g, gc.cells.at("R"), gc.cells.at("Rprime"));
    c.expect(!d.unbounded() && d.value() == 4,
             "expected distance 4, got " + (d.unbounded() ? "unbounded" : std::to_string(d.value())));
    why = c.why;
    return c.ok;
}

bool gate2(std::string& why) {
    Check c;
    const GeneratedComplex gc = gen_thick_square();
    const CellComplex& x = gc.complex;
    c.expect(x.faces2().size() == 17, "expected 17 2-cells, got " + std::to_string(x.faces2().size()));

    const FaceGraph g = build_face_graph(x);
    const Subcomplex& ring = gc.marks.at("ring");
    const Subcomplex hull = convex_hull(x, g, ring);
    c.expect(hull.faces.size() == x.faces2().size(), "ring hull misses some 2-cells");

    // Isometric embedding: distances inside the ring as a standalone complex
    // equal the ambient distances between ring faces.
    const CellComplex rx = fixtures::restrict_to(x, ring);
    const FaceGraph rg = build_face_graph(rx);
    for (const auto& a : ring.faces)
        for (const auto& b : ring.faces) {
            const FaceDist da = face_distance(g, a, b);
            const FaceDist dr = face_distance(rg, a, b);
            c.expect(da == dr, "ring distance " + a + " - " + b + " changes when restricted");
        }
    why = c.why;
    return c.ok;
}

bool gate3(std::string& why) {
    Check c;
    c.expect(check_strict_cn_exec(gen_hex(3).complex, 6, Exec::Parallel).empty(),
             "strict C(6) violated on the radius-3 ball");

    const GeneratedComplex bl = gen_blowup(2);
    const Subcomplex& central = bl.marks.at("central");
    for (const auto& v : check_cn_exec(bl.complex, 4, Exec::Parallel))
        c.expect(!central.contains_face(v.face), "C(4) violation inside the central portion: " + v.face);
    c.expect(!check_strict_cn_exec(bl.complex, 6, Exec::Parallel).empty(),
             "doubled-ring complex unexpectedly passes strict C(6)");
    why = c.why;
    return c.ok;
}

bool gate4(std::string& why) {
    Check c;
    std::size_t prev = 0;
    for (int m : {1, 2, 3}) {
        const GeneratedComplex gc = gen_blowup(m);
        const FaceGraph g = build_face_graph(gc.complex);
        const Subcomplex seed =
            span_faces(gc.complex, {gc.cells.at("R"), gc.cells.at("Rprime")});
        const Subcomplex hull = convex_hull(gc.complex, g, seed);
        for (const auto& f : gc.marks.at("central").faces)
            c.expect(hull.contains_face(f),
                     "m=" + std::to_string(m) + ": hull misses central cell " + f);
        c.expect(hull.faces.size() > prev, "m=" + std::to_string(m) + ": hull did not grow");
        prev = hull.faces.size();
    }

    // Contrast: in the tiling ball, two-cell hulls stay metrically tight.
    const CellComplex hex = gen_hex(3).complex;
    const FaceGraph g = build_face_graph(hex);
    for (std::size_t i = 0; i < g.ids.size(); ++i)
        for (std::size_t j = i + 1; j < g.ids.size(); ++j) {
            const Subcomplex hull =
                convex_hull(hex, g, span_faces(hex, {g.ids[i], g.ids[j]}));
            const FaceDist dia = set_diameter(g, hull.faces);
            const FaceDist d = face_distance(g, g.ids[i], g.ids[j]);
            c.expect(!dia.unbounded() && dia.value() <= d.value() + 2,
                     "hull of " + g.ids[i] + ", " + g.ids[j] + " is too wide");
        }
    why = c.why;
    return c.ok;
}

bool gate5(std::string& why) {
    Check c;
    for (const GeneratedComplex& gc : {gen_hex(3), gen_band(6, 2)}) {
        const CellComplex& x = gc.complex;
        const FaceGraph g = build_face_graph(x);

        // Interior edges lie on two 2-cells; a seed with only free edges is a
        // single-cell dead end whose closure cannot cross the complex.
        std::map<std::string, int> edge_cells;
        for (const Face2& f : x.faces2()) {
            std::set<std::string> es;
            for (const Step& s : f.boundary) es.insert(s.edge);
            for (const auto& e : es) ++edge_cells[e];
        }

        std::size_t built = 0;
        std::set<std::vector<std::string>> seen;
        for (const Face2& f : x.faces2()) {
            const int m = static_cast<int>(f.boundary.size());
            if (m != 6) continue;
            for (int p = 0; p < 3; ++p) {
                const std::string& ea = f.boundary[p].edge;
                const std::string& eb = f.boundary[p + 3].edge;
                if (edge_cells[ea] < 2 && edge_cells[eb] < 2) continue;
                const Wall w = extend_to_wall(x, {ea, eb});
                if (!seen.insert(w.edges).second) continue;
                ++built;
                c.expect(w.kind == "wall" && w.conflicts.empty(),
                         "closure from " + f.id + " is only a semi-wall");

                // Incidence law: every 2-cell meets the wall in no edge or in
                // one opposite pair of positions.
                const std::set<std::string> wedges(w.edges.begin(), w.edges.end());
                for (const Face2& r : x.faces2()) {
                    std::vector<int> hit;
                    for (int i = 0; i < static_cast<int>(r.boundary.size()); ++i)
                        if (wedges.count(r.boundary[i].edge)) hit.push_back(i);
                    c.expect(hit.empty() ||
                                 (hit.size() == 2 && positions_opposite(x, r.id, hit[0], hit[1])),
                             r.id + " meets a wall in a non-opposite configuration");
                }

                const HalfspaceResult hs = halfspaces(x, w);
                c.expect(hs.ok && hs.ncomponents == 2 && hs.invariants_ok,
                         "wall does not split into two halfspaces");
                const Subcomplex carrier = wall_carrier(x, w);
                c.expect(is_face_convex(x, g, carrier), "carrier is not face-convex");
                if (hs.ok) {
                    c.expect(is_face_convex(x, g, hs.left), "left halfspace not face-convex");
                    c.expect(is_face_convex(x, g, hs.right), "right halfspace not face-convex");
                }

                // The carrier, read as a face path, is a wall segment whose
                // cells are exactly the interval between its endpoints.
                const std::vector<std::string> path = order_as_path(g, carrier.faces);
                c.expect(!path.empty(), "carrier faces do not form a simple path");
                if (!path.empty()) {
                    const auto seg = segment_from_faces(x, g, path);
                    c.expect(seg.has_value(), "carrier path fails segment verification");
                    const auto iv = interval(g, path.front(), path.back());
                    c.expect(std::set<std::string>(iv.begin(), iv.end()) == carrier.faces,
                             "carrier differs from the endpoint interval");
                }
            }
        }
        c.expect(built >= 3, "suspiciously few distinct walls constructed");
    }

    // Bent segments: two arms meeting at a wide angle stay geodesic (checked
    // against exhaustive shortest-path enumeration); a sharp bend is refused.
    {
        const CellComplex x = gen_hex(3).complex;
        const FaceGraph g = build_face_graph(x);
        const auto arm_a = segment_from_faces(x, g, {"f:-2,2", "f:-1,1", "f:0,0"});
        const auto arm_b = segment_from_faces(x, g, {"f:0,0", "f:1,0", "f:2,0"});
        c.expect(arm_a && arm_b, "straight arms fail segment verification");
        if (arm_a && arm_b) {
            c.expect(verify_bent_segment(x, g, *arm_a, *arm_b).ok, "wide bend rejected");
            std::vector<int> concat;
            for (const auto& id : {"f:-2,2", "f:-1,1", "f:0,0", "f:1,0", "f:2,0"})
                concat.push_back(g.node(id));
            const auto geos = oracle::all_geodesics(g.adj, concat.front(), concat.back());
            bool found = false;
            for (const auto& p : geos) found |= (p == concat);
            c.expect(found, "bent segment is not among the brute-forced geodesics");
        }
        const auto arm_sharp = segment_from_faces(x, g, {"f:0,0", "f:0,1", "f:0,2"});
        c.expect(arm_a && arm_sharp && !verify_bent_segment(x, g, *arm_a, *arm_sharp).ok,
                 "sharp bend accepted");
    }
    why = c.why;
    return c.ok;
}

bool gate6(std::string& why) {
    Check c;
    std::mt19937 rng(987654321u);
    for (int r : {1, 2, 3}) {
        const CellComplex x = gen_hex(r).complex;
        const FaceGraph g = build_face_graph(x);
        const FaceGraph from_nerve = face_graph_from_nerve(nerve(x));
        const FaceGraph skel = tri_skeleton(r);
        c.expect(from_nerve.ids == skel.ids && from_nerve.adj == skel.adj,
                 "nerve of radius-" + std::to_string(r) + " ball differs from the lattice skeleton");

        // The face metric is the path metric of the nerve.
        std::uniform_int_distribution<int> pick(0, static_cast<int>(g.ids.size()) - 1);
        for (int t = 0; t < 1000; ++t) {
            const std::string a = g.ids[static_cast<std::size_t>(pick(rng))];
            const std::string b = g.ids[static_cast<std::size_t>(pick(rng))];
            c.expect(face_distance(g, a, b) == face_distance(from_nerve, a, b),
                     "metric mismatch at " + a + " - " + b);
        }

        const SystolicReport rep = local_systolic_report(x, g);
        c.expect(rep.ok, "link check failed on the radius-" + std::to_string(r) + " ball");
        for (const auto& id : rep.interior_faces) {
            const LinkReport lr = link_six_large_node(g, g.node(id));
            c.expect(lr.six_large && !lr.aborted, "interior link not 6-large: " + id);
        }
    }

    // Round trip: flat nerve regions pull back to exactly the sub-patch.
    // Every ball around every cell of the radius-3 fixture that stays inside
    // it is such a region; that is 64 sub-patches, singletons included.
    const GeneratedComplex gc3 = gen_hex(3);
    const FaceGraph g3 = build_face_graph(gc3.complex);
    std::size_t patches = 0;
    for (int cq = -3; cq <= 3; ++cq)
        for (int cr = std::max(-3, -3 - cq); cr <= std::min(3, 3 - cq); ++cr)
            for (int rad = 0; rad <= 3 - hexdist(cq, cr, 0, 0); ++rad) {
                ++patches;
                const std::vector<std::string> faces =
                    fixtures::hex_ball_faces(gc3, cq, cr, rad);
                const FlatPullback fp = pullback_flat(gc3.complex, g3, faces);
                c.expect(fp.ok, "pullback failed for the radius-" + std::to_string(rad) +
                                    " sub-patch at " + std::to_string(cq) + "," +
                                    std::to_string(cr));
                c.expect(fp.patch == span_faces(gc3.complex, faces),
                         "pullback patch differs from the sub-patch span");
            }
    c.expect(patches == 64, "sub-patch census changed: " + std::to_string(patches));
    why = c.why;
    return c.ok;
}

bool gate7(std::string& why) {
    Check c;
    {
        const GeneratedComplex gc = gen_hex(2);
        const GreendlingerReport rep = greendlinger_check(gc.complex, make_hex_diagram(gc));
        c.expect(rep.verdict == "three-or-more", "ball diagram verdict: " + rep.verdict);
        c.expect(rep.spur_count + static_cast<int>(rep.low_shells.size()) >= 3,
                 "fewer than three boundary records");
    }
    {
        const GeneratedComplex gc = gen_band(5, 1);
        const GreendlingerReport rep = greendlinger_check(gc.complex, make_hex_diagram(gc));
        c.expect(rep.verdict == "ladder", "chain diagram verdict: " + rep.verdict);
    }
    {
        const CellComplex ambient = fixtures::square_ambient();
        const DiscDiagram folded = fixtures::folded_pair_diagram();
        c.expect(is_reduced(ambient, folded).has_value(), "folded pair lacks a reduction witness");
        c.expect(greendlinger_check(ambient, folded).verdict == "unreduced",
                 "folded pair not reported unreduced");
    }
    for (const GeneratedComplex& gc : {gen_hex(1), gen_hex(2), gen_hex(3), gen_band(5, 1),
                                       gen_band(4, 2), fixtures::triangle_patch()}) {
        const GreendlingerReport rep = greendlinger_check(gc.complex, make_hex_diagram(gc));
        c.expect(rep.verdict != "violation", "violation verdict emitted on the corpus");
    }
    why = c.why;
    return c.ok;
}

bool gate8(std::string& why) {
    Check c;
    std::size_t paths = 0;
    for (const GeneratedComplex& gc :
         {gen_hex(2), gen_petal(3), gen_petal(4), gen_petal(5), gen_band(4, 2)}) {
        const CellComplex& x = gc.complex;
        for (const Face2& f : x.faces2()) {
            const int m = static_cast<int>(f.boundary.size());
            for (int dir : {+1, -1})
                for (int start = 0; start < m; ++start)
                    for (int len = 1; len <= m; ++len) {
                        const std::vector<Step> p = boundary_subpath(f, start, dir, len);
                        ++paths;
                        c.expect(piece_length_path(x, p) == oracle::plength_path(x, p),
                                 "decomposition mismatch on a boundary path of " + f.id);
                        if (!c.ok) { why = c.why; return false; }
                    }
        }
    }
    c.expect(paths <= 10000, "path census larger than intended: " + std::to_string(paths));

    for (int n : {3, 4, 5}) {
        const GeneratedComplex gc = gen_petal(n);
        c.expect(check_cn(gc.complex, 2 * n).empty(),
                 "flower n=" + std::to_string(n) + " fails C(2n)");
        c.expect(!check_cn(gc.complex, 2 * n + 1).empty(),
                 "flower n=" + std::to_string(n) + " passes C(2n+1)");
        const Subcomplex meet =
            subcomplex_intersection(gc.marks.at("Y1"), gc.marks.at("Y2"));
        c.expect(subcomplex_components(gc.complex, meet).size() == 2,
                 "petal halves meet in other than two components");
    }
    why = c.why;
    return c.ok;
}

bool gate9(std::string& why) {
    Check c;
    const GeneratedComplex glued = fixtures::glue_hex_pair();
    const CellComplex& x = glued.complex;
    const FaceGraph g = build_face_graph(x);

    // The composite fixture should be detected as exactly two maximal
    // honeycomb patches (full radius-3 balls) overlapping in the glued cell.
    const std::vector<std::vector<std::string>> found = find_honeycomb_patches(x);
    c.expect(found.size() == 2,
             "expected two maximal patches, found " + std::to_string(found.size()));
    std::vector<Subcomplex> patches;
    std::set<std::set<std::string>> distinct;
    for (const auto& faces : found) {
        c.expect(faces.size() == 37, "maximal patch is not a full radius-3 ball");
        distinct.insert(std::set<std::string>(faces.begin(), faces.end()));
        patches.push_back(span_faces(x, faces));
    }
    c.expect(distinct.size() == found.size(), "detected patches are not distinct");

    // Bounds documented beside glue_hex_pair in support/fixtures.hpp: the
    // r-thickened overlap stays near the glued cell, so its diameter is at
    // most {0, 2, 4} for r = {0, 1, 2}.
    const int bound_r[3] = {0, 2, 4};
    for (std::size_t i = 0; i < patches.size(); ++i)
        for (std::size_t j = i + 1; j < patches.size(); ++j) {
            int prev = -1;
            for (int r = 0; r <= 2; ++r) {
                const FaceDist d = coarse_intersection_diameter(x, g, patches[i], patches[j], r);
                c.expect(!d.unbounded() && d.value() <= bound_r[r],
                         "seam diameter at r=" + std::to_string(r) + ": " +
                             (d.unbounded() ? "unbounded" : std::to_string(d.value())) +
                             ", bound " + std::to_string(bound_r[r]));
                if (d.unbounded()) break;
                c.expect(d.value() >= prev, "seam diameter shrank as r grew");
                prev = d.value();
            }
        }

    // Self-intersection of a patch: diameter doubles the patch radius.
    const GeneratedComplex gc3 = gen_hex(3);
    const FaceGraph g3 = build_face_graph(gc3.complex);
    int prev = -1;
    for (int rad : {1, 2, 3}) {
        const Subcomplex ball =
            span_faces(gc3.complex, fixtures::hex_ball_faces(gc3, 0, 0, rad));
        const FaceDist d = coarse_intersection_diameter(gc3.complex, g3, ball, ball, 0);
        c.expect(!d.unbounded() && d.value() == 2 * rad,
                 "self-diameter at radius " + std::to_string(rad) + " is not " +
                     std::to_string(2 * rad));
        c.expect(!d.unbounded() && d.value() > prev, "self-diameter did not grow");
        if (!d.unbounded()) prev = d.value();
    }
    why = c.why;
    return c.ok;
}

struct GateDef {
    int id;
    const char* label;
    std::function<bool(std::string&)> fn;
    double budget_s;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<GateDef> gates = {
        {1, "antipodal central cells sit at face distance 4", gate1, 1.0},
        {2, "thick square: 17 cells, spanning ring hull, isometric ring", gate2, 1.0},
        {3, "strict condition on the ball; split verdicts on the doubled ring", gate3, 10.0},
        {4, "pair hulls absorb the central portion; tiling hulls stay tight", gate4, 60.0},
        {5, "walls: opposite law, two halfspaces, convex carriers, segments", gate5, 120.0},
        {6, "nerve = lattice skeleton; metric agreement; flat pullback", gate6, 60.0},
        {7, "diagram verdicts: three-or-more, ladder, reduction witness", gate7, 10.0},
        {8, "decomposition DP vs exhaustive oracle; flower thresholds", gate8, 120.0},
        {9, "seam intersections bounded; self-diameter grows with radius", gate9, 30.0},
    };

    int which = 0;
    if (argc > 1) {
        which = std::atoi(argv[1]);
        if (which < 1 || which > 9) {
            std::fprintf(stderr, "usage: %s [gate 1..9]\n", argv[0]);
            return 2;
        }
    }

    bool all_ok = true;
    for (const GateDef& gd : gates) {
        if (which != 0 && gd.id != which) continue;
        std::string why;
        bool ok = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = gd.fn(why);
        } catch (const std::exception& e) {
            ok = false;
            why = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = secs <= gd.budget_s;
        if (!in_budget && why.empty())
            why = "over budget (" + std::to_string(gd.budget_s) + "s)";
        ok = ok && in_budget;
        std::printf("[gate %d] %-64s %s (%.2fs)%s%s\n", gd.id, gd.label, ok ? "ok " : "FAIL",
                    secs, why.empty() ? "" : " -- ", why.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
