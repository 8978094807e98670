// Disc diagram validation and the spur/shell/ladder machinery.
//
// Validation works by tracing the faces of the rotation system: the
// successor of a dart is the rotation-successor of its reverse, so orbits of
// that permutation are the face walks of the (unique) planar embedding the
// rotations describe.  The orbit walks, compared as unoriented cycles, must
// be exactly the diagram's 2-cell boundaries plus one outer walk equal to
// the declared boundary; together with V - E + F = 1 and connectivity this
// pins the diagram to a disc.
//
// Reducedness scans every pair of boundary sites for maximal common
// readings, discards the diagram's own boundary symmetries (full cyclic
// agreement), and demands each remaining overlap map to an ambient piece.

#include "scw/diagrams.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "scw/metrics.hpp"

namespace scw {

namespace {

// Ambient image of a diagram step.  The edge flip is derived from the vertex
// images; for an ambient loop both orientations agree and +1 is used.
// Assumes the map survived validate_diagram.
Step map_step(const CellComplex& amb, const CellComplex& dia, const CellMap& cm,
              const Step& s) {
    const EdgeRec& de = dia.edge(s.edge);
    const EdgeRec& ae = amb.edge(cm.edges.at(s.edge));
    const std::string& iu = cm.vertices.at(de.src);
    int flip = (iu == ae.src) ? +1 : -1;
    return Step{ae.id, s.dir * flip};
}

std::vector<Step> map_path(const CellComplex& amb, const CellComplex& dia, const CellMap& cm,
                           const std::vector<Step>& steps) {
    std::vector<Step> out;
    out.reserve(steps.size());
    for (const Step& s : steps) out.push_back(map_step(amb, dia, cm, s));
    return out;
}

// Dart encoding for the face-tracing permutation.
int dart_code(const CellComplex& x, const Step& s) {
    return 2 * x.edge_index(s.edge) + (s.dir < 0 ? 1 : 0);
}

Step dart_step(const CellComplex& x, int code) {
    return Step{x.edges()[code / 2].id, code % 2 == 0 ? +1 : -1};
}

}  // namespace

std::vector<DiagramIssue> validate_diagram(const CellComplex& ambient, const DiscDiagram& d,
                                           ReversalPolicy policy) {
    std::vector<DiagramIssue> issues;
    const CellComplex& dc = d.complex;

    for (const ValidationIssue& vi : validate(dc))
        issues.push_back({"bad-complex", vi.code + ": " + vi.detail});
    if (!issues.empty()) return issues;  // everything below assumes a sane complex

    // Rotation system: exactly the vertices, exactly the emanating darts.
    std::map<std::string, std::vector<Step>> expected;
    for (const std::string& v : dc.vertices()) expected[v];
    for (const EdgeRec& e : dc.edges()) {
        expected[e.src].push_back(Step{e.id, +1});
        expected[e.dst].push_back(Step{e.id, -1});
    }
    for (const auto& [v, darts] : d.rotation)
        if (!dc.has_vertex(v)) issues.push_back({"rotation-extra-vertex", v});
    for (const auto& [v, want] : expected) {
        auto it = d.rotation.find(v);
        if (it == d.rotation.end()) {
            issues.push_back({"rotation-missing-vertex", v});
            continue;
        }
        std::vector<Step> have = it->second, need = want;
        std::sort(have.begin(), have.end());
        std::sort(need.begin(), need.end());
        if (have != need)
            issues.push_back({"rotation-bad-darts",
                              v + " does not list exactly the emanating darts"});
    }

    // Connectivity of the 1-skeleton (2-cells attach along edges, so this is
    // connectivity of the whole diagram).
    if (!dc.vertices().empty()) {
        std::map<std::string, std::vector<std::string>> nbr;
        for (const EdgeRec& e : dc.edges()) {
            nbr[e.src].push_back(e.dst);
            nbr[e.dst].push_back(e.src);
        }
        std::set<std::string> seen{dc.vertices()[0]};
        std::vector<std::string> stack{dc.vertices()[0]};
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            for (const std::string& w : nbr[v])
                if (seen.insert(w).second) stack.push_back(w);
        }
        for (const std::string& v : dc.vertices())
            if (!seen.count(v)) {
                issues.push_back({"not-connected", "vertex " + v + " unreachable"});
                break;
            }
    }

    // Boundary: a closed walk over known edges.
    for (const Step& s : d.boundary)
        if (!dc.has_edge(s.edge)) {
            issues.push_back({"boundary-unknown-edge", s.edge});
            return issues;
        }
    for (std::size_t i = 0; i < d.boundary.size(); ++i) {
        const Step& a = d.boundary[i];
        const Step& b = d.boundary[(i + 1) % d.boundary.size()];
        if (dc.step_dst(a) != dc.step_src(b)) {
            issues.push_back({"boundary-not-closed",
                              "after " + a.edge + " the walk jumps vertices"});
            break;
        }
    }
    if (!issues.empty()) return issues;

    // Face tracing.  next(dart) = rotation successor of the reversed dart.
    if (dc.edges().empty()) {
        if (!d.boundary.empty())
            issues.push_back({"faces-mismatch", "boundary walk on an edgeless diagram"});
    } else {
        const int ndarts = 2 * static_cast<int>(dc.edges().size());
        std::vector<int> succ(ndarts, -1);
        for (const auto& [v, darts] : d.rotation) {
            const int n = static_cast<int>(darts.size());
            for (int i = 0; i < n; ++i)
                succ[dart_code(dc, darts[i])] = dart_code(dc, darts[(i + 1) % n]);
        }
        std::vector<char> used(ndarts, 0);
        std::multiset<std::vector<Step>> orbit_keys;
        for (int d0 = 0; d0 < ndarts; ++d0) {
            if (used[d0]) continue;
            std::vector<Step> walk;
            int cur = d0;
            do {
                used[cur] = 1;
                walk.push_back(dart_step(dc, cur));
                cur = succ[dart_code(dc, reversed(dart_step(dc, cur)))];
            } while (cur != d0);
            // Orbits are compared as unoriented cycles: the attaching maps
            // and the boundary walk may be written with either orientation.
            orbit_keys.insert(cycle_key(walk, ReversalPolicy::Agnostic));
        }
        std::multiset<std::vector<Step>> cell_keys;
        for (const Face2& f : dc.faces2())
            cell_keys.insert(cycle_key(f.boundary, ReversalPolicy::Agnostic));
        cell_keys.insert(cycle_key(d.boundary, ReversalPolicy::Agnostic));
        if (orbit_keys != cell_keys)
            issues.push_back(
                {"faces-mismatch", "rotation traces " + std::to_string(orbit_keys.size()) +
                                       " faces, diagram declares " +
                                       std::to_string(cell_keys.size()) +
                                       " (2-cells plus the outer walk), or the walks differ"});
    }

    const long euler = static_cast<long>(dc.vertices().size()) -
                       static_cast<long>(dc.edges().size()) +
                       static_cast<long>(dc.faces2().size());
    if (euler != 1)
        issues.push_back({"euler", "V - E + F = " + std::to_string(euler) + ", expected 1"});

    // The cellular map: total per dimension, edges compatible with the vertex
    // images, faces commuting with boundaries up to rotation (and reversal
    // when the policy allows).
    for (const auto& [id, img] : d.map.vertices)
        if (!dc.has_vertex(id)) issues.push_back({"map-extra", "vertex " + id});
    for (const auto& [id, img] : d.map.edges)
        if (!dc.has_edge(id)) issues.push_back({"map-extra", "edge " + id});
    for (const auto& [id, img] : d.map.faces)
        if (!dc.has_face2(id)) issues.push_back({"map-extra", "face " + id});

    bool edges_ok = true;
    for (const std::string& v : dc.vertices()) {
        auto it = d.map.vertices.find(v);
        if (it == d.map.vertices.end() || !ambient.has_vertex(it->second))
            issues.push_back({"map-vertex", v});
    }
    for (const EdgeRec& e : dc.edges()) {
        auto it = d.map.edges.find(e.id);
        if (it == d.map.edges.end() || !ambient.has_edge(it->second)) {
            issues.push_back({"map-edge", e.id});
            edges_ok = false;
            continue;
        }
        auto su = d.map.vertices.find(e.src), sv = d.map.vertices.find(e.dst);
        if (su == d.map.vertices.end() || sv == d.map.vertices.end()) {
            edges_ok = false;
            continue;  // already reported via map-vertex
        }
        const EdgeRec& ae = ambient.edge(it->second);
        const bool fwd = su->second == ae.src && sv->second == ae.dst;
        const bool bwd = su->second == ae.dst && sv->second == ae.src;
        if (!fwd && !bwd) {
            issues.push_back({"map-edge", e.id + " endpoints do not match " + ae.id});
            edges_ok = false;
        }
    }
    for (const Face2& f : dc.faces2()) {
        auto it = d.map.faces.find(f.id);
        if (it == d.map.faces.end() || !ambient.has_face2(it->second)) {
            issues.push_back({"map-face", f.id});
            continue;
        }
        if (!edges_ok) continue;  // image path not well defined
        std::vector<Step> img = map_path(ambient, dc, d.map, f.boundary);
        if (!cycles_equivalent(img, ambient.face2(it->second).boundary, policy))
            issues.push_back(
                {"map-face", f.id + " does not commute with the boundary of " + it->second});
    }
    return issues;
}

std::vector<std::string> find_spurs(const DiscDiagram& d) {
    std::map<std::string, int> degree;
    for (const EdgeRec& e : d.complex.edges()) {
        ++degree[e.src];
        ++degree[e.dst];
    }
    std::vector<std::string> out;
    for (const std::string& v : d.complex.vertices())
        if (degree[v] == 1) out.push_back(v);
    return out;
}

std::vector<ShellRecord> classify_shells(const CellComplex& ambient, const DiscDiagram& d,
                                         ReversalPolicy policy) {
    std::vector<ShellRecord> out;
    const CellComplex& dc = d.complex;
    std::map<std::string, int> occ;  // edge -> occurrences in the outer walk
    for (const Step& s : d.boundary) ++occ[s.edge];
    const int bn = static_cast<int>(d.boundary.size());

    for (const Face2& f : dc.faces2()) {
        const int m = static_cast<int>(f.boundary.size());
        std::vector<char> outer(m, 0);
        int cnt = 0;
        for (int p = 0; p < m; ++p)
            if (occ.count(f.boundary[p].edge)) {
                outer[p] = 1;
                ++cnt;
            }
        if (cnt == 0) continue;

        // The outer part must be one contiguous arc of the cell boundary.
        int start = 0;
        if (cnt < m) {
            int nstarts = 0;
            for (int p = 0; p < m; ++p)
                if (outer[p] && !outer[(p + m - 1) % m]) {
                    start = p;
                    ++nstarts;
                }
            if (nstarts != 1) continue;
        }
        std::vector<Step> q, s;
        for (int t = 0; t < m; ++t)
            (t < cnt ? q : s).push_back(f.boundary[(start + t) % m]);

        // ... and appear contiguously in the outer walk, in either direction.
        bool on_walk = false;
        for (int j = 0; j < bn && !on_walk; ++j) {
            bool fwd = true, bwd = true;
            for (int t = 0; t < cnt && (fwd || bwd); ++t) {
                const Step& b = d.boundary[(j + t) % bn];
                fwd = fwd && b == q[t];
                bwd = bwd && b == reversed(q[cnt - 1 - t]);
            }
            on_walk = fwd || bwd;
        }
        if (!on_walk) continue;

        ShellRecord rec;
        rec.face = f.id;
        rec.outer_arc = std::move(q);
        rec.inner_arc = s;
        rec.grade = piece_length_path(ambient, map_path(ambient, dc, d.map, s), policy);
        out.push_back(std::move(rec));
    }
    return out;
}

std::optional<std::vector<std::string>> is_ladder(const DiscDiagram& d) {
    FaceGraph g = build_face_graph(d.complex);
    const int n = static_cast<int>(g.ids.size());
    if (n == 0) return std::nullopt;
    if (n == 1) return std::vector<std::string>{g.ids[0]};

    std::vector<int> ends;
    for (int i = 0; i < n; ++i) {
        if (g.adj[i].size() == 1)
            ends.push_back(i);
        else if (g.adj[i].size() != 2)
            return std::nullopt;
    }
    if (ends.size() != 2) return std::nullopt;

    // Walk from the lex-least endpoint; a path graph must consume all nodes.
    int at = g.ids[ends[0]] < g.ids[ends[1]] ? ends[0] : ends[1];
    std::vector<std::string> order{g.ids[at]};
    int prev = -1;
    while (static_cast<int>(order.size()) < n) {
        int nxt = -1;
        for (int nb : g.adj[at])
            if (nb != prev) nxt = nb;
        if (nxt < 0) return std::nullopt;  // cycle elsewhere; not a path
        prev = at;
        at = nxt;
        order.push_back(g.ids[at]);
    }
    return order;
}

std::optional<ReductionWitness> is_reduced(const CellComplex& ambient, const DiscDiagram& d,
                                           ReversalPolicy policy) {
    const CellComplex& dc = d.complex;

    // Boundary sites of the diagram: every (face, start, direction).
    struct Site {
        int f, start, dir;
    };
    std::vector<Site> sites;
    for (int fi = 0; fi < static_cast<int>(dc.faces2().size()); ++fi) {
        const int m = static_cast<int>(dc.faces2()[fi].boundary.size());
        for (int dir : {+1, -1})
            for (int i = 0; i < m; ++i) sites.push_back(Site{fi, i, dir});
    }
    auto read = [&](const Site& s, int t) -> Step {
        const std::vector<Step>& b = dc.faces2()[s.f].boundary;
        const int m = static_cast<int>(b.size());
        if (s.dir > 0) return b[((s.start + t) % m + m) % m];
        return reversed(b[((s.start - 1 - t) % m + m) % m]);
    };
    // The step a site would have read just before its first one; used to keep
    // only maximally aligned pairs.
    auto read_before = [&](const Site& s) { return read(s, -1); };

    std::set<std::vector<Step>> seen;
    for (std::size_t a = 0; a < sites.size(); ++a)
        for (std::size_t b = a + 1; b < sites.size(); ++b) {
            const int ma = static_cast<int>(dc.faces2()[sites[a].f].boundary.size());
            const int mb = static_cast<int>(dc.faces2()[sites[b].f].boundary.size());
            const int cap = ma + mb;
            if (read(sites[a], 0) != read(sites[b], 0)) continue;
            if (read_before(sites[a]) == read_before(sites[b])) continue;  // not maximal
            int len = 1;
            while (len < cap && read(sites[a], len) == read(sites[b], len)) ++len;
            if (len >= cap) continue;  // full cyclic agreement: a symmetry, not an overlap

            std::vector<Step> overlap;
            for (int t = 0; t < len; ++t) overlap.push_back(read(sites[a], t));
            std::vector<Step> canon = std::min(overlap, reversed_path(overlap));
            if (!seen.insert(canon).second) continue;

            if (!is_piece(ambient, map_path(ambient, dc, d.map, overlap), policy)) {
                ReductionWitness w;
                w.face_a = dc.faces2()[sites[a].f].id;
                w.face_b = dc.faces2()[sites[b].f].id;
                w.overlap = std::move(overlap);
                return w;
            }
        }
    return std::nullopt;
}

GreendlingerReport greendlinger_check(const CellComplex& ambient, const DiscDiagram& d,
                                      ReversalPolicy policy) {
    GreendlingerReport rep;
    std::vector<DiagramIssue> issues = validate_diagram(ambient, d, policy);
    if (!issues.empty()) {
        rep.verdict = "invalid";
        rep.detail = issues[0].code + ": " + issues[0].detail;
        return rep;
    }
    if (d.complex.faces2().empty()) {
        rep.verdict = "trivial";
        rep.detail = "diagram has no 2-cells";
        return rep;
    }
    if (auto w = is_reduced(ambient, d, policy)) {
        rep.verdict = "unreduced";
        rep.detail = "overlap of " + w->face_a + " and " + w->face_b +
                     " does not map to an ambient piece";
        return rep;
    }
    if (!check_cn(ambient, 6, policy).empty()) {
        rep.verdict = "ambient-not-c6";
        rep.detail = "the ambient complex is not C(6), so the count is not forced";
        return rep;
    }

    rep.spur_count = static_cast<int>(find_spurs(d).size());
    for (ShellRecord& s : classify_shells(ambient, d, policy))
        if (s.grade <= PieceLength::of(3)) rep.low_shells.push_back(std::move(s));
    const int count = rep.spur_count + static_cast<int>(rep.low_shells.size());

    if (count >= 3) {
        bool tight_ok = true;
        if (count == 3)
            for (const ShellRecord& s : rep.low_shells)
                tight_ok = tight_ok && s.grade <= PieceLength::of(2);
        if (tight_ok) {
            rep.verdict = "three-or-more";
            rep.detail = std::to_string(rep.spur_count) + " spurs, " +
                         std::to_string(rep.low_shells.size()) + " low-grade shells";
        } else {
            rep.verdict = "violation";
            rep.detail = "exactly three boundary positions but a shell of grade 3";
        }
        return rep;
    }
    if (auto order = is_ladder(d)) {
        rep.verdict = "ladder";
        rep.detail = "cells form a path of length " + std::to_string(order->size());
        return rep;
    }
    rep.verdict = "violation";
    rep.detail = "only " + std::to_string(count) +
                 " spur/low-shell positions and the diagram is not a ladder";
    return rep;
}

}  // namespace scw
