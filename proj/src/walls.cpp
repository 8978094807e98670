// Wall closure, carriers, halfspaces, and straight/bent wall segments.
//
// Closure is deterministic: always process the least 2-cell (by id) meeting
// the growing set in exactly one edge, and among its opposite partners add
// the least one that does not immediately break the opposite-pair discipline
// elsewhere.  When only breaking partners exist the least is added anyway
// and the conflict recorded; when no partner exists at all the cell is set
// aside.  Either way the run finishes and the result is honestly labelled.

#include "scw/walls.hpp"

#include <algorithm>
#include <functional>

#include "piece_scan.hpp"

namespace scw {

namespace {

struct WallContext {
    const CellComplex* x;
    detail::PieceScanner scanner;
    IncidenceIndex inc;

    // Per face: edges of the current set on its boundary (distinct ids).
    std::vector<std::string> set_edges_on(int fi, const std::set<std::string>& edges) const {
        std::set<std::string> hits;
        for (const Step& s : x->faces2()[fi].boundary)
            if (edges.count(s.edge)) hits.insert(s.edge);
        return {hits.begin(), hits.end()};
    }

    // Whether two edges of a face admit an opposite occurrence pair.
    bool opposite_in(int fi, const std::string& ea, const std::string& eb) const {
        const Face2& f = x->faces2()[fi];
        const int m = static_cast<int>(f.boundary.size());
        for (int p = 0; p < m; ++p) {
            if (f.boundary[p].edge != ea) continue;
            for (int q = 0; q < m; ++q) {
                if (f.boundary[q].edge != eb) continue;
                if (scanner.positions_opposite(fi, p, q)) return true;
            }
        }
        return false;
    }

    // A face's verdict against an edge set: true when it meets the set in
    // zero edges or in two edges with an opposite occurrence pair.
    bool face_ok(int fi, const std::set<std::string>& edges) const {
        std::vector<std::string> hits = set_edges_on(fi, edges);
        if (hits.empty()) return true;
        if (hits.size() != 2) return false;
        return opposite_in(fi, hits[0], hits[1]);
    }

    // Opposite partners of `e` on face fi that are not yet in the set.
    std::vector<std::string> partners(int fi, const std::string& e,
                                      const std::set<std::string>& edges) const {
        const Face2& f = x->faces2()[fi];
        const int m = static_cast<int>(f.boundary.size());
        std::set<std::string> out;
        for (int p = 0; p < m; ++p) {
            if (f.boundary[p].edge != e) continue;
            for (int q = 0; q < m; ++q)
                if (!edges.count(f.boundary[q].edge) &&
                    scanner.positions_opposite(fi, p, q))
                    out.insert(f.boundary[q].edge);
        }
        return {out.begin(), out.end()};
    }

    // Adding `cand` must not immediately leave some face meeting the set in
    // three-plus edges or a non-opposite pair.
    bool eligible(const std::string& cand, const std::set<std::string>& edges) const {
        std::set<std::string> after = edges;
        after.insert(cand);
        int ei = x->edge_index(cand);
        for (int fi : inc.edge_faces[ei]) {
            std::vector<std::string> hits = set_edges_on(fi, after);
            if (hits.size() >= 3) return false;
            if (hits.size() == 2 && !opposite_in(fi, hits[0], hits[1])) return false;
        }
        return true;
    }

    // Least unblocked face meeting the set in exactly one edge; -1 when done.
    int next_face(const std::set<std::string>& edges,
                  const std::set<std::string>& blocked) const {
        int best = -1;
        for (int fi = 0; fi < static_cast<int>(x->faces2().size()); ++fi) {
            const Face2& f = x->faces2()[fi];
            if (blocked.count(f.id)) continue;
            if (set_edges_on(fi, edges).size() != 1) continue;
            if (best < 0 || f.id < x->faces2()[best].id) best = fi;
        }
        return best;
    }

    Wall finish(const std::set<std::string>& edges, std::vector<WallLogEntry> log,
                std::vector<WallConflict> conflicts) const {
        Wall w;
        w.edges.assign(edges.begin(), edges.end());
        w.log = std::move(log);
        w.conflicts = std::move(conflicts);
        bool clean = w.conflicts.empty();
        for (int fi = 0; clean && fi < static_cast<int>(x->faces2().size()); ++fi)
            clean = face_ok(fi, edges);
        w.kind = clean ? "wall" : "semi-wall";
        return w;
    }
};

WallContext make_context(const CellComplex& x, ReversalPolicy policy) {
    return WallContext{&x, detail::PieceScanner::build(x, policy), IncidenceIndex::build(x)};
}

}  // namespace

Wall extend_to_wall(const CellComplex& x, const std::vector<std::string>& seed,
                    ReversalPolicy policy) {
    WallContext ctx = make_context(x, policy);
    std::set<std::string> edges;
    for (const std::string& e : seed) {
        x.edge(e);  // throws for unknown ids
        edges.insert(e);
    }
    std::vector<WallLogEntry> log;
    std::vector<WallConflict> conflicts;
    std::set<std::string> blocked;

    for (;;) {
        int fi = ctx.next_face(edges, blocked);
        if (fi < 0) break;
        const std::string face_id = x.faces2()[fi].id;
        const std::string meet = ctx.set_edges_on(fi, edges)[0];
        std::vector<std::string> cands = ctx.partners(fi, meet, edges);
        std::string chosen;
        for (const std::string& c : cands)
            if (ctx.eligible(c, edges)) {
                chosen = c;
                break;
            }
        if (chosen.empty() && !cands.empty()) {
            chosen = cands.front();  // least partner, knowingly conflicting
            conflicts.push_back(WallConflict{face_id, meet});
        }
        if (chosen.empty()) {
            blocked.insert(face_id);
            conflicts.push_back(WallConflict{face_id, meet});
            continue;
        }
        edges.insert(chosen);
        log.push_back(WallLogEntry{face_id, chosen});
    }
    return ctx.finish(edges, std::move(log), std::move(conflicts));
}

std::vector<Wall> enumerate_walls(const CellComplex& x, const std::vector<std::string>& seed,
                                  ReversalPolicy policy, std::size_t max_walls) {
    WallContext ctx = make_context(x, policy);
    for (const std::string& e : seed) x.edge(e);

    std::vector<Wall> out;
    std::set<std::vector<std::string>> seen;
    std::size_t budget = max_walls * 64;  // exploration cap, not a result cap

    struct Node {
        std::set<std::string> edges, blocked;
        std::vector<WallLogEntry> log;
        std::vector<WallConflict> conflicts;
    };
    std::function<void(Node)> explore = [&](Node nd) {
        if (out.size() >= max_walls || budget == 0) return;
        --budget;
        for (;;) {
            int fi = ctx.next_face(nd.edges, nd.blocked);
            if (fi < 0) {
                Wall w = ctx.finish(nd.edges, nd.log, nd.conflicts);
                if (seen.insert(w.edges).second) out.push_back(std::move(w));
                return;
            }
            const std::string face_id = x.faces2()[fi].id;
            const std::string meet = ctx.set_edges_on(fi, nd.edges)[0];
            std::vector<std::string> cands = ctx.partners(fi, meet, nd.edges);
            std::vector<std::string> usable;
            for (const std::string& c : cands)
                if (ctx.eligible(c, nd.edges)) usable.push_back(c);
            bool conflicting = usable.empty();
            if (conflicting) usable = cands;
            if (usable.empty()) {
                nd.blocked.insert(face_id);
                nd.conflicts.push_back(WallConflict{face_id, meet});
                continue;
            }
            // Branch on every partner beyond the first; continue with the least.
            for (std::size_t i = 1; i < usable.size(); ++i) {
                Node branch = nd;
                branch.edges.insert(usable[i]);
                branch.log.push_back(WallLogEntry{face_id, usable[i]});
                if (conflicting) branch.conflicts.push_back(WallConflict{face_id, meet});
                explore(std::move(branch));
            }
            nd.edges.insert(usable[0]);
            nd.log.push_back(WallLogEntry{face_id, usable[0]});
            if (conflicting) nd.conflicts.push_back(WallConflict{face_id, meet});
        }
    };
    Node root;
    root.edges.insert(seed.begin(), seed.end());
    explore(std::move(root));
    return out;
}

Subcomplex wall_carrier(const CellComplex& x, const Wall& w) {
    std::set<std::string> wset(w.edges.begin(), w.edges.end());
    IncidenceIndex inc = IncidenceIndex::build(x);
    std::vector<std::string> face_ids;
    for (const Face2& f : x.faces2())
        for (const Step& s : f.boundary)
            if (wset.count(s.edge)) {
                face_ids.push_back(f.id);
                break;
            }
    for (const std::string& e : w.edges)
        if (edge_isolated(inc, x.edge_index(e))) face_ids.push_back(e);
    return span_faces(x, face_ids);
}

HalfspaceResult halfspaces(const CellComplex& x, const Wall& w) {
    HalfspaceResult res;
    Subcomplex carrier = wall_carrier(x, w);
    std::set<std::string> wset(w.edges.begin(), w.edges.end());

    // Complement of the wall: everything except wall edges and carrier cells.
    Subcomplex comp;
    for (const std::string& v : x.vertices()) comp.vertices.insert(v);
    for (const EdgeRec& e : x.edges())
        if (!wset.count(e.id)) comp.edges.insert(e.id);
    for (const Face2& f : x.faces2())
        if (!carrier.contains_face(f.id)) comp.faces.insert(f.id);

    res.components = subcomplex_components(x, comp);
    res.ncomponents = static_cast<int>(res.components.size());
    res.ok = res.ncomponents == 2;
    if (res.ok) {
        res.left = subcomplex_union(res.components[0], carrier);
        res.right = subcomplex_union(res.components[1], carrier);
        Subcomplex whole;
        for (const std::string& v : x.vertices()) whole.vertices.insert(v);
        for (const EdgeRec& e : x.edges()) whole.edges.insert(e.id);
        for (const Face2& f : x.faces2()) whole.faces.insert(f.id);
        res.invariants_ok = subcomplex_union(res.left, res.right) == whole &&
                            subcomplex_intersection(res.left, res.right) == carrier;
    }
    return res;
}

WallSplitResult wall_split(const CellComplex& x, const Wall& w, const Subcomplex& carrier,
                           const std::string& e, const std::string& eprime,
                           ReversalPolicy policy) {
    (void)w;
    detail::PieceScanner sc = detail::PieceScanner::build(x, policy);

    Subcomplex removed;
    for (const std::string& fid : carrier.faces) {
        const Face2& f = x.face2(fid);
        bool has_e = false, has_ep = false;
        for (const Step& s : f.boundary) {
            has_e = has_e || s.edge == e;
            has_ep = has_ep || s.edge == eprime;
        }
        if (!has_e || !has_ep) continue;
        removed.faces.insert(fid);

        // Edges of the cell survive only inside a boundary piece that also
        // carries e or e'.
        const int m = static_cast<int>(f.boundary.size());
        std::vector<Step> doubled;
        for (int t = 0; t < 2 * m; ++t) doubled.push_back(f.boundary[t % m]);
        detail::PieceScanner::PathTable table = sc.analyze(doubled);
        std::set<std::string> keep;
        for (int a = 0; a < m; ++a)
            for (int len = 1; len <= m; ++len) {
                if (!table.is_piece(a, len)) continue;
                bool carries = false;
                for (int t = 0; t < len && !carries; ++t)
                    carries = doubled[a + t].edge == e || doubled[a + t].edge == eprime;
                if (!carries) continue;
                for (int t = 0; t < len; ++t) keep.insert(doubled[a + t].edge);
            }
        for (const Step& s : f.boundary)
            if (!keep.count(s.edge)) removed.edges.insert(s.edge);
    }

    Subcomplex remainder = carrier;
    for (const std::string& f : removed.faces) remainder.faces.erase(f);
    for (const std::string& ed : removed.edges) remainder.edges.erase(ed);

    WallSplitResult res;
    res.removed = std::move(removed);
    res.components = subcomplex_components(x, remainder);
    return res;
}

// --- wall segments ----------------------------------------------------------

namespace {

bool uses_edge(const Face2& f, const std::string& e) {
    for (const Step& s : f.boundary)
        if (s.edge == e) return true;
    return false;
}

SegmentCheck fail(const std::string& reason) { return SegmentCheck{false, reason}; }

}  // namespace

SegmentCheck verify_wall_segment(const CellComplex& x, const FaceGraph& g,
                                 const WallSegment& seg, ReversalPolicy policy) {
    const int n = static_cast<int>(seg.faces.size());
    if (n == 0) return fail("empty segment");
    if (static_cast<int>(seg.links.size()) != n - 1)
        return fail("link count must be faces - 1");
    for (const std::string& f : seg.faces)
        if (!x.has_face2(f)) return fail("unknown 2-cell " + f);

    detail::PieceScanner sc = detail::PieceScanner::build(x, policy);
    for (int i = 0; i + 1 < n; ++i) {
        const Face2& a = x.face2(seg.faces[i]);
        const Face2& b = x.face2(seg.faces[i + 1]);
        if (!uses_edge(a, seg.links[i]) || !uses_edge(b, seg.links[i]))
            return fail("link " + seg.links[i] + " not shared by consecutive cells");
        if (cycles_equivalent(a.boundary, b.boundary, policy))
            return fail("consecutive cells " + a.id + ", " + b.id +
                        " share an attaching cycle");
    }
    // Interior cells must carry their two links at opposite positions.
    for (int i = 1; i + 1 <= n - 1; ++i) {
        const int fi = x.face2_index(seg.faces[i]);
        const Face2& f = x.faces2()[fi];
        const int m = static_cast<int>(f.boundary.size());
        bool found = false;
        for (int p = 0; p < m && !found; ++p) {
            if (f.boundary[p].edge != seg.links[i - 1]) continue;
            for (int q = 0; q < m && !found; ++q) {
                if (f.boundary[q].edge != seg.links[i]) continue;
                found = sc.positions_opposite(fi, p, q);
            }
        }
        if (!found)
            return fail("links not opposite in " + f.id);
    }

    FaceDist d = face_distance(g, seg.faces.front(), seg.faces.back());
    if (d.unbounded() || d.value() != n - 1) return fail("face sequence is not geodesic");
    std::vector<std::string> iv = interval(g, seg.faces.front(), seg.faces.back());
    std::set<std::string> iv_set(iv.begin(), iv.end());
    std::set<std::string> seg_set(seg.faces.begin(), seg.faces.end());
    if (iv_set != seg_set) return fail("interval between endpoints is not the segment");
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            const std::vector<int>& nb = g.adj[g.node(seg.faces[i])];
            if (std::binary_search(nb.begin(), nb.end(), g.node(seg.faces[j])))
                return fail("non-consecutive cells " + seg.faces[i] + ", " + seg.faces[j] +
                            " are adjacent");
        }
    return SegmentCheck{true, ""};
}

SegmentCheck verify_bent_segment(const CellComplex& x, const FaceGraph& g,
                                 const WallSegment& arm_a, const WallSegment& arm_b,
                                 ReversalPolicy policy) {
    SegmentCheck ca = verify_wall_segment(x, g, arm_a, policy);
    if (!ca.ok) return fail("first arm: " + ca.reason);
    SegmentCheck cb = verify_wall_segment(x, g, arm_b, policy);
    if (!cb.ok) return fail("second arm: " + cb.reason);
    if (arm_a.faces.back() != arm_b.faces.front())
        return fail("arms do not share an end cell");
    std::set<std::string> sa(arm_a.faces.begin(), arm_a.faces.end());
    for (std::size_t i = 1; i < arm_b.faces.size(); ++i)
        if (sa.count(arm_b.faces[i])) return fail("arms share more than the bend cell");

    // A tight bend is excluded: the cells flanking the bend must be disjoint.
    if (arm_a.faces.size() >= 2 && arm_b.faces.size() >= 2) {
        const std::string& before = arm_a.faces[arm_a.faces.size() - 2];
        const std::string& after = arm_b.faces[1];
        const std::vector<int>& nb = g.adj[g.node(before)];
        if (g.node(after) >= 0 &&
            std::binary_search(nb.begin(), nb.end(), g.node(after)))
            return fail("cells flanking the bend intersect");
    }

    const int total = static_cast<int>(arm_a.faces.size() + arm_b.faces.size()) - 1;
    FaceDist d = face_distance(g, arm_a.faces.front(), arm_b.faces.back());
    if (d.unbounded() || d.value() != total - 1)
        return fail("concatenation is not geodesic");
    return SegmentCheck{true, ""};
}

std::optional<WallSegment> segment_from_faces(const CellComplex& x, const FaceGraph& g,
                                              const std::vector<std::string>& faces,
                                              ReversalPolicy policy) {
    const int n = static_cast<int>(faces.size());
    if (n == 0) return std::nullopt;
    for (const std::string& f : faces)
        if (!x.has_face2(f)) return std::nullopt;

    // Candidate links per junction: edges shared by the two boundaries.
    std::vector<std::vector<std::string>> options;
    for (int i = 0; i + 1 < n; ++i) {
        std::set<std::string> ea, shared;
        for (const Step& s : x.face2(faces[i]).boundary) ea.insert(s.edge);
        for (const Step& s : x.face2(faces[i + 1]).boundary)
            if (ea.count(s.edge)) shared.insert(s.edge);
        if (shared.empty()) return std::nullopt;
        options.emplace_back(shared.begin(), shared.end());
    }

    WallSegment seg;
    seg.faces = faces;
    seg.links.assign(n - 1 > 0 ? n - 1 : 0, "");
    std::function<std::optional<WallSegment>(int)> pick =
        [&](int i) -> std::optional<WallSegment> {
        if (i == n - 1) {
            if (verify_wall_segment(x, g, seg, policy).ok) return seg;
            return std::nullopt;
        }
        for (const std::string& e : options[i]) {
            seg.links[i] = e;
            if (auto got = pick(i + 1)) return got;
        }
        return std::nullopt;
    };
    return pick(0);
}

}  // namespace scw
