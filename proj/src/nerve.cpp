// Nerve graphs, link largeness, honeycomb patches, and flat pullbacks.
//
// The patch recognizer runs in three stages.  Stage 1 is combinatorial
// bookkeeping on the chosen 2-cells: embedded boundaries, every shared edge
// on at most two patch cells, the shared edges of each pair forming one
// clean side (a contiguous run in both boundaries, read either reversed or
// forward), and no vertex-only contacts.  Stage 2 assigns each cell a hex
// coordinate and a handedness by walking the side-sharing graph: each cell's
// runs must map to distinct hexagon directions, with unshared boundary
// stretches accounting for whole missing sides; ambiguous side splits are
// explored with backtracking under a budget.  Stage 3 classifies the
// certified coordinate set as a ball, a band, or something else.

#include "scw/nerve.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

#include "scw/metrics.hpp"

namespace scw {

// --- nerve graphs -----------------------------------------------------------

NerveGraph nerve_of_graph(const FaceGraph& g) {
    NerveGraph n;
    n.nodes = g.ids;
    for (int i = 0; i < static_cast<int>(g.ids.size()); ++i)
        for (int j : g.adj[i])
            if (i < j) n.edges.emplace_back(g.ids[i], g.ids[j]);
    for (auto& e : n.edges)
        if (e.second < e.first) std::swap(e.first, e.second);
    std::sort(n.edges.begin(), n.edges.end());
    n.edges.erase(std::unique(n.edges.begin(), n.edges.end()), n.edges.end());
    return n;
}

NerveGraph nerve(const CellComplex& x) { return nerve_of_graph(build_face_graph(x)); }

FaceGraph face_graph_from_nerve(const NerveGraph& n) {
    FaceGraph g;
    for (const std::string& id : n.nodes) {
        if (g.index.count(id)) throw std::invalid_argument("duplicate nerve node: " + id);
        g.index.emplace(id, static_cast<int>(g.ids.size()));
        g.ids.push_back(id);
        g.is_two_cell.push_back(true);  // nerve nodes are abstract faces
    }
    g.adj.assign(g.ids.size(), {});
    for (const auto& [a, b] : n.edges) {
        int ia = g.node(a), ib = g.node(b);
        if (ia < 0) throw std::out_of_range("unknown nerve node: " + a);
        if (ib < 0) throw std::out_of_range("unknown nerve node: " + b);
        if (ia == ib) continue;
        g.adj[ia].push_back(ib);
        g.adj[ib].push_back(ia);
    }
    for (auto& nb : g.adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

// --- link largeness ---------------------------------------------------------

LinkReport link_six_large_node(const FaceGraph& g, int node, int max_degree) {
    LinkReport rep;
    rep.six_large = true;
    const std::vector<int>& nb = g.adj[node];
    const int deg = static_cast<int>(nb.size());
    if (deg <= 3) return rep;  // too few link vertices for an induced C4/C5
    if (deg > max_degree) {
        rep.six_large = false;
        rep.aborted = true;
        rep.node = g.ids[node];
        rep.abort_detail = "link of " + g.ids[node] + " has degree " + std::to_string(deg) +
                           ", beyond the search cap " + std::to_string(max_degree);
        return rep;
    }

    // Adjacency within the link as bitmask rows over link positions.
    const int words = (deg + 63) / 64;
    std::vector<std::uint64_t> m(static_cast<std::size_t>(deg) * words, 0);
    auto row = [&](int i) { return m.data() + static_cast<std::size_t>(i) * words; };
    for (int i = 0; i < deg; ++i)
        for (int j = 0; j < deg; ++j)
            if (i != j && std::binary_search(g.adj[nb[i]].begin(), g.adj[nb[i]].end(), nb[j]))
                row(i)[j >> 6] |= std::uint64_t{1} << (j & 63);
    auto linked = [&](int i, int j) { return (row(i)[j >> 6] >> (j & 63)) & 1; };
    auto found = [&](std::vector<int> cyc) {
        rep.six_large = false;
        rep.node = g.ids[node];
        for (int i : cyc) rep.cycle.push_back(g.ids[nb[i]]);
        return rep;
    };

    // Induced 4-cycles: a non-adjacent pair with two non-adjacent common
    // neighbours.
    for (int u = 0; u < deg; ++u)
        for (int v = u + 1; v < deg; ++v) {
            if (linked(u, v)) continue;
            std::vector<int> common;
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = row(u)[w] & row(v)[w];
                while (bits) {
                    common.push_back(w * 64 + std::countr_zero(bits));
                    bits &= bits - 1;
                }
            }
            for (std::size_t a = 0; a < common.size(); ++a)
                for (std::size_t b = a + 1; b < common.size(); ++b)
                    if (!linked(common[a], common[b]))
                        return found({u, common[a], v, common[b]});
        }

    // Induced 5-cycles, canonicalized: v0 least, v1 < v4.
    for (int v0 = 0; v0 < deg; ++v0)
        for (int v1 = v0 + 1; v1 < deg; ++v1) {
            if (!linked(v0, v1)) continue;
            for (int v2 = v0 + 1; v2 < deg; ++v2) {
                if (!linked(v1, v2) || linked(v0, v2)) continue;
                for (int v3 = v0 + 1; v3 < deg; ++v3) {
                    if (!linked(v2, v3) || linked(v1, v3) || linked(v0, v3)) continue;
                    for (int w = 0; w < words; ++w) {
                        std::uint64_t cand =
                            row(v3)[w] & row(v0)[w] & ~row(v1)[w] & ~row(v2)[w];
                        while (cand) {
                            const int v4 = w * 64 + std::countr_zero(cand);
                            cand &= cand - 1;
                            if (v4 > v1) return found({v0, v1, v2, v3, v4});
                        }
                    }
                }
            }
        }
    return rep;
}

LinkReport link_six_large(const FaceGraph& g, int max_degree) {
    LinkReport first_abort;
    bool saw_abort = false;
    for (int n = 0; n < static_cast<int>(g.ids.size()); ++n) {
        LinkReport rep = link_six_large_node(g, n, max_degree);
        if (!rep.six_large && !rep.aborted) return rep;  // a witness beats an abort
        if (rep.aborted && !saw_abort) {
            first_abort = rep;
            saw_abort = true;
        }
    }
    if (saw_abort) return first_abort;
    LinkReport clean;
    clean.six_large = true;
    return clean;
}

SystolicReport local_systolic_report(const CellComplex& x, const FaceGraph& g) {
    SystolicReport rep;
    rep.link = link_six_large(g);
    rep.ok = rep.link.six_large && !rep.link.aborted;

    IncidenceIndex inc = IncidenceIndex::build(x);
    std::vector<int> sources;
    for (int n = 0; n < static_cast<int>(g.ids.size()); ++n) {
        bool boundary = false;
        if (g.is_two_cell[n]) {
            for (const Step& s : x.face2(g.ids[n]).boundary)
                if (inc.edge_faces[x.edge_index(s.edge)].size() < 2) {
                    boundary = true;
                    break;
                }
        } else {
            boundary = true;  // an isolated edge lies on no 2-cell at all
        }
        if (boundary) {
            rep.boundary_faces.push_back(g.ids[n]);
            sources.push_back(n);
        }
    }
    std::vector<int> dist = bfs_from(g, sources);
    for (int n = 0; n < static_cast<int>(g.ids.size()); ++n)
        if (dist[n] < 0 || dist[n] >= 2) rep.interior_faces.push_back(g.ids[n]);
    return rep;
}

// --- honeycomb patch recognition --------------------------------------------

namespace {

constexpr Hex kDirs[6] = {{1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}, {1, 0}};

Hex hex_add(const Hex& a, const Hex& b) { return Hex{a.q + b.q, a.r + b.r}; }

int hexdist(const Hex& a, const Hex& b) {
    int dq = a.q - b.q, dr = a.r - b.r;
    return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

// One maximal block of boundary positions shared with a single neighbour.
struct SideRun {
    int start = 0, len = 0;  // positions start .. start+len-1 (cyclic)
    int nb = -1;             // neighbour's index in PatchScan::cells
    int back = -1;           // index of the matching run in the neighbour
    int rel = 0;             // +1 same handedness, -1 mirrored
};

struct PatchCell {
    std::string id;
    const Face2* f = nullptr;
    int M = 0;
    std::vector<SideRun> runs;  // in cyclic boundary order
    std::vector<int> gaps;      // gaps[i] = unshared edges after runs[i]
};

struct PatchScan {
    const CellComplex* x = nullptr;
    std::vector<PatchCell> cells;
    std::map<std::string, int> index;
    std::string reason;  // empty when stage 1 passed
    bool solved = false, ambiguous = false;
    std::vector<Hex> coord;  // per cell, when solved
};

// Vertex at a boundary position (source of the step starting there).
std::string pos_vertex(const CellComplex& x, const PatchCell& pc, int p) {
    return x.step_src(pc.f->boundary[p]);
}

int run_of_neighbour(const PatchCell& pc, int nb) {
    for (int a = 0; a < static_cast<int>(pc.runs.size()); ++a)
        if (pc.runs[a].nb == nb) return a;
    return -1;
}

// Stage 1: boundary-level structure of the chosen cells.  `ids` sorted,
// deduplicated, all known 2-cells.
PatchScan scan_stage1(const CellComplex& x, const std::vector<std::string>& ids) {
    PatchScan sc;
    sc.x = &x;
    for (const std::string& id : ids) {
        PatchCell pc;
        pc.id = id;
        pc.f = &x.face2(id);
        pc.M = static_cast<int>(pc.f->boundary.size());
        sc.index.emplace(id, static_cast<int>(sc.cells.size()));
        sc.cells.push_back(std::move(pc));
    }

    for (const PatchCell& pc : sc.cells) {
        std::set<std::string> es, vs;
        for (int p = 0; p < pc.M; ++p) {
            es.insert(pc.f->boundary[p].edge);
            vs.insert(pos_vertex(x, pc, p));
        }
        if (static_cast<int>(es.size()) != pc.M || static_cast<int>(vs.size()) != pc.M) {
            sc.reason = "boundary of " + pc.id + " is not embedded";
            return sc;
        }
    }

    std::map<std::string, std::vector<int>> by_edge, by_vertex;
    for (int i = 0; i < static_cast<int>(sc.cells.size()); ++i)
        for (int p = 0; p < sc.cells[i].M; ++p) {
            by_edge[sc.cells[i].f->boundary[p].edge].push_back(i);
            by_vertex[pos_vertex(x, sc.cells[i], p)].push_back(i);
        }
    for (const auto& [e, lst] : by_edge)
        if (lst.size() > 2) {
            sc.reason = "edge " + e + " lies on three or more patch cells";
            return sc;
        }
    for (const auto& [v, lst] : by_vertex)
        if (lst.size() > 3) {
            sc.reason = "vertex " + v + " lies on four or more patch cells";
            return sc;
        }

    // Runs per cell, from the per-position owner array.
    for (int i = 0; i < static_cast<int>(sc.cells.size()); ++i) {
        PatchCell& pc = sc.cells[i];
        std::vector<int> own(pc.M, -1);
        for (int p = 0; p < pc.M; ++p)
            for (int j : by_edge[pc.f->boundary[p].edge])
                if (j != i) own[p] = j;
        std::vector<int> starts;
        for (int p = 0; p < pc.M; ++p)
            if (own[p] >= 0 && own[(p + pc.M - 1) % pc.M] != own[p]) starts.push_back(p);
        if (starts.empty() && own[0] >= 0) starts.push_back(0);  // glued all around
        for (int s : starts) {
            SideRun r;
            r.start = s;
            r.nb = own[s];
            while (r.len < pc.M && own[(s + r.len) % pc.M] == r.nb) ++r.len;
            pc.runs.push_back(r);
        }
        std::set<int> seen_nb;
        for (const SideRun& r : pc.runs)
            if (!seen_nb.insert(r.nb).second) {
                sc.reason = "cells " + pc.id + ", " + sc.cells[r.nb].id +
                            " share more than one side";
                return sc;
            }
        const int k = static_cast<int>(pc.runs.size());
        for (int a = 0; a < k; ++a) {
            const SideRun& cur = pc.runs[a];
            const SideRun& nxt = pc.runs[(a + 1) % k];
            pc.gaps.push_back(((nxt.start - (cur.start + cur.len)) % pc.M + pc.M) % pc.M);
        }
    }

    for (const auto& [v, lst] : by_vertex)
        for (std::size_t a = 0; a < lst.size(); ++a)
            for (std::size_t b = a + 1; b < lst.size(); ++b)
                if (run_of_neighbour(sc.cells[lst[a]], lst[b]) < 0) {
                    sc.reason = "cells " + sc.cells[lst[a]].id + ", " + sc.cells[lst[b]].id +
                                " meet at a vertex but share no edge";
                    return sc;
                }

    // Pair up runs and derive relative handedness from the gluing direction.
    for (int i = 0; i < static_cast<int>(sc.cells.size()); ++i) {
        PatchCell& A = sc.cells[i];
        for (SideRun& r : A.runs) {
            if (r.nb < i) continue;  // handled from the other side
            PatchCell& B = sc.cells[r.nb];
            int rb = run_of_neighbour(B, i);
            if (rb < 0 || B.runs[rb].len != r.len) {
                sc.reason = "shared side of " + A.id + ", " + B.id + " is inconsistent";
                return sc;
            }
            bool fwd = true, rev = true;
            for (int t = 0; t < r.len; ++t) {
                const Step& bs = B.f->boundary[(B.runs[rb].start + t) % B.M];
                fwd = fwd && bs == A.f->boundary[(r.start + t) % A.M];
                rev = rev && bs == reversed(A.f->boundary[(r.start + r.len - 1 - t) % A.M]);
            }
            if (!fwd && !rev) {
                sc.reason = "cells " + A.id + ", " + B.id +
                            " are not glued along a single clean side";
                return sc;
            }
            r.back = rb;
            r.rel = rev ? 1 : -1;
            B.runs[rb].back = static_cast<int>(&r - A.runs.data());
            B.runs[rb].rel = r.rel;
        }
    }
    return sc;
}

bool side_connected(const PatchScan& sc) {
    if (sc.cells.empty()) return false;
    std::vector<char> seen(sc.cells.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (const SideRun& r : sc.cells[i].runs)
            if (!seen[r.nb]) {
                seen[r.nb] = 1;
                stack.push_back(r.nb);
            }
    }
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

// Stage 2: backtracking assignment of coordinates, handedness, and side
// directions.  Every cell's runs get distinct directions; unshared stretches
// between consecutive runs are split into whole missing sides (a stretch of
// t >= 1 edges may stand for 1..min(t,5) sides), and the splits must sum to
// the six sides of a hexagon.
struct SideSolver {
    const PatchScan* sc;
    struct Slot {
        bool placed = false;
        Hex c{};
        int sigma = 0;
        std::vector<int> dir;  // per run; -1 unknown
    };
    std::vector<Slot> slot;
    std::map<Hex, int> owner;
    std::vector<int> queue;
    long budget = 200000;
    bool ambiguous = false;

    bool final_ok() {
        for (const Slot& s : slot)
            if (!s.placed) return false;
        // Coordinate adjacency must be realized by an actual shared side.
        for (int i = 0; i < static_cast<int>(slot.size()); ++i)
            for (const Hex& d : kDirs) {
                auto it = owner.find(hex_add(slot[i].c, d));
                if (it != owner.end() && run_of_neighbour(sc->cells[i], it->second) < 0)
                    return false;
            }
        return true;
    }

    bool solve(std::size_t qi) {
        if (ambiguous) return false;
        if (qi == queue.size()) return final_ok();
        const int i = queue[qi];
        const PatchCell& pc = sc->cells[i];
        const int k = static_cast<int>(pc.runs.size());
        if (6 - k < 0) return false;
        int anchor = 0;
        while (anchor < k && slot[i].dir[anchor] < 0) ++anchor;
        if (anchor == k) return false;  // queued cells always carry an entry direction

        // Suffix bounds for pruning the side-split enumeration.
        std::vector<int> lo(k + 1, 0), hi(k + 1, 0), gsel(k, 0);
        for (int t = k - 1; t >= 0; --t) {
            lo[t] = lo[t + 1] + (pc.gaps[t] > 0 ? 1 : 0);
            hi[t] = hi[t + 1] + std::min(pc.gaps[t], 5);
        }
        std::function<bool(int, int)> comp = [&](int t, int used) -> bool {
            if (ambiguous) return false;
            const int need = 6 - k - used;
            if (t == k) return need == 0 && try_split(qi, i, anchor, gsel);
            if (need < lo[t] || need > hi[t]) return false;
            if (pc.gaps[t] == 0) {
                gsel[t] = 0;
                return comp(t + 1, used);
            }
            for (int gv = 1; gv <= std::min(pc.gaps[t], 5); ++gv) {
                gsel[t] = gv;
                if (comp(t + 1, used + gv)) return true;
            }
            return false;
        };
        return comp(0, 0);
    }

    bool try_split(std::size_t qi, int i, int anchor, const std::vector<int>& g) {
        if (--budget <= 0) {
            ambiguous = true;
            return false;
        }
        const PatchCell& pc = sc->cells[i];
        const int k = static_cast<int>(pc.runs.size());
        Slot& sl = slot[i];

        std::vector<int> dirs(k, -1);
        dirs[anchor] = sl.dir[anchor];
        for (int s = 0; s < k - 1; ++s) {
            int a = (anchor + s) % k, b = (a + 1) % k;
            dirs[b] = ((dirs[a] + sl.sigma * (1 + g[a])) % 6 + 6) % 6;
        }
        int mask = 0;
        for (int d : dirs) {
            if (mask & (1 << d)) return false;
            mask |= 1 << d;
        }
        for (int a = 0; a < k; ++a)
            if (sl.dir[a] >= 0 && sl.dir[a] != dirs[a]) return false;

        std::vector<int> placed;
        std::vector<std::pair<int, int>> forced;
        std::vector<int> saved_dir = sl.dir;
        const std::size_t qsnap = queue.size();
        bool ok = true;
        for (int a = 0; a < k && ok; ++a) {
            const SideRun& r = pc.runs[a];
            const Hex cc = hex_add(sl.c, kDirs[dirs[a]]);
            const int srel = sl.sigma * r.rel;
            const int dback = (dirs[a] + 3) % 6;
            Slot& ns = slot[r.nb];
            if (ns.placed) {
                if (!(ns.c == cc) || ns.sigma != srel) {
                    ok = false;
                    break;
                }
                int& nd = ns.dir[r.back];
                if (nd < 0) {
                    nd = dback;
                    forced.emplace_back(r.nb, r.back);
                } else if (nd != dback) {
                    ok = false;
                }
            } else {
                if (!owner.emplace(cc, r.nb).second) {
                    ok = false;  // coordinate already taken
                    break;
                }
                ns.placed = true;
                ns.c = cc;
                ns.sigma = srel;
                ns.dir.assign(sc->cells[r.nb].runs.size(), -1);
                ns.dir[r.back] = dback;
                queue.push_back(r.nb);
                placed.push_back(r.nb);
            }
        }
        if (ok) {
            sl.dir = dirs;
            if (solve(qi + 1)) return true;
        }
        sl.dir = saved_dir;
        for (auto [ci, ri] : forced) slot[ci].dir[ri] = -1;
        for (int ci : placed) {
            owner.erase(slot[ci].c);
            slot[ci] = Slot{};
        }
        queue.resize(qsnap);
        return false;
    }
};

// Runs the solver; root cell anchored at the origin with its first run on
// direction 0 (rotation, reflection, and translation are quotiented out).
void solve_coords(PatchScan& sc) {
    SideSolver sv;
    sv.sc = &sc;
    sv.slot.resize(sc.cells.size());
    SideSolver::Slot& root = sv.slot[0];
    root.placed = true;
    root.c = Hex{0, 0};
    root.sigma = 1;
    root.dir.assign(sc.cells[0].runs.size(), -1);
    root.dir[0] = 0;
    sv.owner.emplace(Hex{0, 0}, 0);
    sv.queue.push_back(0);
    sc.solved = sv.solve(0);
    sc.ambiguous = sv.ambiguous;
    if (sc.solved) {
        sc.coord.resize(sc.cells.size());
        for (std::size_t i = 0; i < sc.cells.size(); ++i) sc.coord[i] = sv.slot[i].c;
    }
}

// Stage 3: shape of a certified coordinate set.

std::vector<Hex> band_coords(int l, int w) {
    std::vector<Hex> out;
    for (int row = 0; row < w; ++row)
        for (int col = 0; col < l; ++col)
            out.push_back(Hex{col - (row - (row & 1)) / 2, row});
    return out;
}

// Least representative under the 12 lattice symmetries and translation.
std::vector<Hex> canonical_coords(std::vector<Hex> cs) {
    auto rot = [](const Hex& h) { return Hex{-h.r, h.q + h.r}; };
    auto refl = [](const Hex& h) { return Hex{h.r, h.q}; };
    std::vector<Hex> best;
    for (int t = 0; t < 12; ++t) {
        std::vector<Hex> cur = cs;
        if (t >= 6)
            for (Hex& h : cur) h = refl(h);
        for (int s = 0; s < t % 6; ++s)
            for (Hex& h : cur) h = rot(h);
        int mq = cur[0].q, mr = cur[0].r;
        for (const Hex& h : cur) {
            mq = std::min(mq, h.q);
            mr = std::min(mr, h.r);
        }
        for (Hex& h : cur) h = Hex{h.q - mq, h.r - mr};
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

std::string classify_shape(const std::vector<Hex>& cs, int& radius) {
    const int n = static_cast<int>(cs.size());
    for (int r = 0; 3 * r * r + 3 * r + 1 <= n; ++r) {
        if (3 * r * r + 3 * r + 1 != n) continue;
        for (const Hex& c : cs) {
            bool ball = true;
            for (const Hex& h : cs) ball = ball && hexdist(c, h) <= r;
            if (ball) {
                radius = r;
                return "ball";
            }
        }
        break;  // only one radius can match the count
    }
    std::vector<Hex> canon = canonical_coords(cs);
    for (int l = 1; l <= n; ++l)
        if (n % l == 0 && canonical_coords(band_coords(l, n / l)) == canon) return "band";
    return "other";
}

bool embedded_boundary(const CellComplex& x, const Face2& f) {
    std::set<std::string> es, vs;
    for (const Step& s : f.boundary) {
        es.insert(s.edge);
        vs.insert(x.step_src(s));
    }
    return es.size() == f.boundary.size() && vs.size() == f.boundary.size();
}

PatchReport patch_check(const CellComplex& x, const std::vector<std::string>& faces_in,
                        ReversalPolicy policy, bool with_missing) {
    PatchReport rep;
    std::vector<std::string> faces = faces_in;
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (faces.empty()) {
        rep.reason = "empty face set";
        return rep;
    }
    for (const std::string& id : faces) x.face2(id);  // throws for unknown ids

    if (faces.size() == 1) {
        const Face2& f = x.face2(faces[0]);
        if (!embedded_boundary(x, f))
            rep.reason = "boundary of " + faces[0] + " is not embedded";
        else if (f.boundary.size() < 6)
            rep.reason = "boundary of " + faces[0] + " has fewer than six edges";
        else {
            rep.honeycomb = true;
            rep.shape = "ball";
            rep.radius = 0;
            rep.ok = true;
            rep.coords.emplace(faces[0], Hex{0, 0});
        }
    } else {
        PatchScan sc = scan_stage1(x, faces);
        if (sc.reason.empty() && !side_connected(sc))
            sc.reason = "patch cells are not connected through shared sides";
        if (sc.reason.empty()) solve_coords(sc);
        if (!sc.reason.empty())
            rep.reason = sc.reason;
        else if (!sc.solved)
            rep.reason = sc.ambiguous
                             ? "side assignment search budget exhausted; structure ambiguous"
                             : "no consistent assignment of sides to hexagon directions";
        else {
            rep.honeycomb = true;
            for (std::size_t i = 0; i < sc.cells.size(); ++i)
                rep.coords.emplace(sc.cells[i].id, sc.coord[i]);
            rep.shape = classify_shape(sc.coord, rep.radius);
            rep.ok = rep.shape == "ball";
        }
    }
    if (rep.honeycomb && with_missing)
        rep.missing = check_no_missing(x, span_faces(x, faces), MissingMode::Complements, 3,
                                       policy);
    return rep;
}

}  // namespace

PatchReport is_honeycomb_patch(const CellComplex& x, const std::vector<std::string>& faces,
                               ReversalPolicy policy) {
    return patch_check(x, faces, policy, true);
}

std::vector<std::vector<std::string>> find_honeycomb_patches(const CellComplex& x,
                                                             ReversalPolicy policy) {
    FaceGraph g = build_face_graph(x);
    const int n = static_cast<int>(g.ids.size());
    std::set<std::vector<std::string>> candidates;

    for (int c = 0; c < n; ++c) {
        if (!g.is_two_cell[c]) continue;
        // BFS distances within the 2-cell-induced graph.
        std::vector<int> dist(n, -1);
        std::vector<int> order{c};
        dist[c] = 0;
        for (std::size_t h = 0; h < order.size(); ++h)
            for (int nb : g.adj[order[h]])
                if (g.is_two_cell[nb] && dist[nb] < 0) {
                    dist[nb] = dist[order[h]] + 1;
                    order.push_back(nb);
                }
        int maxd = 0;
        for (int u : order) maxd = std::max(maxd, dist[u]);

        std::vector<std::string> ball, best;
        std::size_t taken = 0;
        for (int rho = 0; rho <= maxd; ++rho) {
            while (taken < order.size() && dist[order[taken]] <= rho)
                ball.push_back(g.ids[order[taken++]]);
            if (patch_check(x, ball, policy, false).ok) best = ball;
        }
        if (!best.empty()) {
            std::sort(best.begin(), best.end());
            candidates.insert(std::move(best));
        }
    }

    std::vector<std::vector<std::string>> out;
    for (const auto& s : candidates) {
        bool maximal = true;
        for (const auto& t : candidates)
            if (s.size() < t.size() && std::includes(t.begin(), t.end(), s.begin(), s.end()))
                maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

FlatPullback pullback_flat(const CellComplex& x, const FaceGraph& g,
                           const std::vector<std::string>& nodes) {
    FlatPullback fp;
    std::vector<std::string> ids = nodes;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) {
        fp.reason = "empty node set";
        return fp;
    }
    for (const std::string& id : ids) {
        int nn = g.node(id);
        if (nn < 0 || !g.is_two_cell[nn] || !x.has_face2(id)) {
            fp.reason = "node " + id + " is not a 2-cell of the nerve";
            return fp;
        }
    }

    if (ids.size() == 1) {
        const Face2& f = x.face2(ids[0]);
        if (!embedded_boundary(x, f) || f.boundary.size() < 6) {
            fp.reason = "cell " + ids[0] + " is not a hexagon up to subdivision";
            return fp;
        }
        fp.ok = true;
        fp.patch = span_faces(x, ids);
        return fp;
    }

    PatchScan sc = scan_stage1(x, ids);
    if (sc.reason.empty() && !side_connected(sc))
        sc.reason = "patch cells are not connected through shared sides";
    if (sc.reason.empty()) solve_coords(sc);
    if (!sc.reason.empty() || !sc.solved) {
        fp.reason = !sc.reason.empty() ? sc.reason
                    : sc.ambiguous
                        ? "side assignment search budget exhausted; structure ambiguous"
                        : "no consistent assignment of sides to hexagon directions";
        return fp;
    }

    // Every lattice triangle of the region must close up around its corner
    // vertex: the two sides of the corner cell end there, and so must the
    // side its two neighbours share with each other.
    std::map<Hex, int> at;
    for (std::size_t i = 0; i < sc.cells.size(); ++i) at.emplace(sc.coord[i], i);
    for (std::size_t hi = 0; hi < sc.cells.size(); ++hi) {
        const PatchCell& H = sc.cells[hi];
        const int k = static_cast<int>(H.runs.size());
        for (int d = 0; d < 6; ++d) {
            auto ia = at.find(hex_add(sc.coord[hi], kDirs[d]));
            auto ib = at.find(hex_add(sc.coord[hi], kDirs[(d + 1) % 6]));
            if (ia == at.end() || ib == at.end()) continue;
            const int ra = run_of_neighbour(H, ia->second);
            const int rb = run_of_neighbour(H, ib->second);
            int corner_pos = -1;
            if ((ra + 1) % k == rb && H.gaps[ra] == 0)
                corner_pos = H.runs[rb].start;
            else if ((rb + 1) % k == ra && H.gaps[rb] == 0)
                corner_pos = H.runs[ra].start;
            if (corner_pos < 0) {
                fp.reason = "sides of " + H.id + " toward adjacent neighbours are not consecutive";
                return fp;
            }
            const std::string v = pos_vertex(x, H, corner_pos);
            const PatchCell& A = sc.cells[ia->second];
            const int rab = run_of_neighbour(A, ib->second);
            if (rab < 0) {
                fp.reason = "cells " + A.id + ", " + sc.cells[ib->second].id +
                            " at adjacent positions share no side";
                return fp;
            }
            const std::string u1 = pos_vertex(x, A, A.runs[rab].start);
            const std::string u2 =
                pos_vertex(x, A, (A.runs[rab].start + A.runs[rab].len) % A.M);
            if (v != u1 && v != u2) {
                fp.breaking_vertex = v;
                fp.reason = "side shared by " + A.id + " and " + sc.cells[ib->second].id +
                            " does not end at " + v;
                return fp;
            }
        }
    }
    fp.ok = true;
    fp.patch = span_faces(x, ids);
    return fp;
}

FaceGraph tri_skeleton(int r) {
    FaceGraph g;
    if (r < 0) return g;
    std::vector<Hex> coords;
    for (int q = -r; q <= r; ++q)
        for (int rr = std::max(-r, -q - r); rr <= std::min(r, -q + r); ++rr) {
            std::string id = "f:" + std::to_string(q) + "," + std::to_string(rr);
            g.index.emplace(id, static_cast<int>(g.ids.size()));
            g.ids.push_back(id);
            g.is_two_cell.push_back(true);
            coords.push_back(Hex{q, rr});
        }
    std::map<Hex, int> at;
    for (int i = 0; i < static_cast<int>(coords.size()); ++i) at.emplace(coords[i], i);
    g.adj.assign(g.ids.size(), {});
    for (int i = 0; i < static_cast<int>(coords.size()); ++i) {
        for (const Hex& d : kDirs) {
            auto it = at.find(hex_add(coords[i], d));
            if (it != at.end()) g.adj[i].push_back(it->second);
        }
        std::sort(g.adj[i].begin(), g.adj[i].end());
    }
    return g;
}

}  // namespace scw
