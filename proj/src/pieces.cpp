// Piece detection and the piece-length metric.
//
// The exposed functions are thin wrappers over PieceScanner (piece_scan.hpp):
// build the site table once, match it against the path in question, and read
// decompositions off a per-subpath dynamic program.  The program never
// assumes that subpaths of pieces are pieces — every interval's reading set
// is computed directly — and piece_subpath_violations exists to show where
// that assumption would actually fail.

#include "scw/pieces.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "piece_scan.hpp"

namespace scw {

namespace detail {

PieceScanner PieceScanner::build(const CellComplex& x, ReversalPolicy policy) {
    PieceScanner sc;
    sc.x = &x;
    sc.policy = policy;

    std::vector<int> base;  // first site index per face
    for (int fi = 0; fi < static_cast<int>(x.faces2().size()); ++fi) {
        const Face2& f = x.faces2()[fi];
        const int m = static_cast<int>(f.boundary.size());
        base.push_back(static_cast<int>(sc.sites.size()));
        for (int dir : {+1, -1})
            for (int i = 0; i < m; ++i) sc.sites.push_back(Site{fi, i, dir});
    }

    const int s_total = static_cast<int>(sc.sites.size());
    sc.next_site.resize(s_total);
    sc.head_edge.resize(s_total);
    sc.head_dir.resize(s_total);
    for (int si = 0; si < s_total; ++si) {
        const Site& s = sc.sites[si];
        const Face2& f = x.faces2()[s.face];
        const int m = static_cast<int>(f.boundary.size());
        if (s.dir > 0) {
            const Step& st = f.boundary[s.start];
            sc.head_edge[si] = x.edge_index(st.edge);
            sc.head_dir[si] = st.dir;
            sc.next_site[si] = base[s.face] + (s.start + 1) % m;
        } else {
            const Step& st = f.boundary[(s.start - 1 + m) % m];
            sc.head_edge[si] = x.edge_index(st.edge);
            sc.head_dir[si] = -st.dir;
            sc.next_site[si] = base[s.face] + m + (s.start - 1 + m) % m;
        }
    }

    // Commuting-iso classes: intern the full cyclic reading (as edge-index /
    // direction codes); orientation-preserving policy additionally separates
    // the two reading directions.
    sc.site_class.resize(s_total);
    std::map<std::vector<int>, int> interned;
    for (int si = 0; si < s_total; ++si) {
        const int m = static_cast<int>(x.faces2()[sc.sites[si].face].boundary.size());
        std::vector<int> sig;
        sig.reserve(m + 1);
        int cursor = si;
        for (int t = 0; t < m; ++t) {
            sig.push_back(sc.head_edge[cursor] * 2 + (sc.head_dir[cursor] > 0 ? 0 : 1));
            cursor = sc.next_site[cursor];
        }
        if (policy == ReversalPolicy::OrientationPreserving) sig.push_back(sc.sites[si].dir);
        auto [it, fresh] = interned.emplace(std::move(sig), sc.nclasses);
        if (fresh) ++sc.nclasses;
        sc.site_class[si] = it->second;
    }
    return sc;
}

PieceScanner::PathTable PieceScanner::analyze(const std::vector<Step>& p) const {
    PathTable t;
    const int n = static_cast<int>(p.size());
    t.len = n;
    t.piece.assign(n + 1, {});
    for (int s = 0; s <= n; ++s) t.piece[s].assign(n - s + 1, 0);

    std::vector<int> pe(n), pd(n);
    for (int i = 0; i < n; ++i) {
        pe[i] = x->edge_index(p[i].edge);
        pd[i] = p[i].dir;
    }

    const int s_total = static_cast<int>(sites.size());
    std::vector<int> nxt(s_total, 0), cur(s_total, 0);
    std::vector<int> class_best(nclasses, 0), cnt(n + 2, 0);
    for (int s = n - 1; s >= 0; --s) {
        for (int si = 0; si < s_total; ++si)
            cur[si] = (pe[s] >= 0 && head_edge[si] == pe[s] && head_dir[si] == pd[s])
                          ? 1 + nxt[next_site[si]]
                          : 0;
        // Count reading classes per cover length; a subpath is a piece when
        // two distinct classes reach it.
        std::fill(class_best.begin(), class_best.end(), 0);
        for (int si = 0; si < s_total; ++si)
            class_best[site_class[si]] = std::max(class_best[site_class[si]], cur[si]);
        std::fill(cnt.begin(), cnt.end(), 0);
        for (int c = 0; c < nclasses; ++c) ++cnt[class_best[c]];
        int reach = 0;  // classes covering length >= k, accumulated downward
        for (int k = n - s; k >= 1; --k) {
            reach += cnt[k];
            t.piece[s][k] = (reach >= 2) ? 1 : 0;
        }
        std::swap(nxt, cur);
    }
    return t;
}

PieceLength PieceScanner::plength_path(const std::vector<Step>& p) const {
    const int n = static_cast<int>(p.size());
    if (n == 0) return PieceLength::of(0);
    PathTable t = analyze(p);
    std::vector<PieceLength> best(n + 1, PieceLength::bot());
    best[n] = PieceLength::of(0);
    for (int s = n - 1; s >= 0; --s)
        for (int k = 1; s + k <= n; ++k)
            if (t.is_piece(s, k)) {
                PieceLength cand = PieceLength::of(1) + best[s + k];
                if (cand < best[s]) best[s] = cand;
            }
    return best[0];
}

std::vector<PieceLength> PieceScanner::suffix_plengths(const std::vector<Step>& p) const {
    const int n = static_cast<int>(p.size());
    PathTable t = analyze(p);
    std::vector<PieceLength> best(n + 1, PieceLength::bot());
    best[n] = PieceLength::of(0);
    for (int s = n - 1; s >= 0; --s)
        for (int k = 1; s + k <= n; ++k)
            if (t.is_piece(s, k)) {
                PieceLength cand = PieceLength::of(1) + best[s + k];
                if (cand < best[s]) best[s] = cand;
            }
    return best;
}

std::vector<PieceLength> PieceScanner::prefix_plengths(const std::vector<Step>& p) const {
    const int n = static_cast<int>(p.size());
    PathTable t = analyze(p);
    std::vector<PieceLength> best(n + 1, PieceLength::bot());
    best[0] = PieceLength::of(0);
    for (int e = 1; e <= n; ++e)
        for (int s = 0; s < e; ++s)
            if (t.is_piece(s, e - s)) {
                PieceLength cand = best[s] + PieceLength::of(1);
                if (cand < best[e]) best[e] = cand;
            }
    return best;
}

PieceLength PieceScanner::plength_cycle(const std::vector<Step>& cycle) const {
    const int n = static_cast<int>(cycle.size());
    if (n == 0) return PieceLength::of(0);
    PieceLength best = PieceLength::bot();
    for (int rot = 0; rot < n; ++rot) {
        std::vector<Step> p;
        p.reserve(n);
        for (int j = 0; j < n; ++j) p.push_back(cycle[(rot + j) % n]);
        PieceLength v = plength_path(p);
        if (v < best) best = v;
        v = plength_path(reversed_path(p));
        if (v < best) best = v;
    }
    return best;
}

int PieceScanner::match_length(int site, const std::vector<Step>& p, int from) const {
    int len = 0;
    int cursor = site;
    for (int i = from; i < static_cast<int>(p.size()); ++i) {
        const int pe = x->edge_index(p[i].edge);
        if (pe < 0 || head_edge[cursor] != pe || head_dir[cursor] != p[i].dir) break;
        ++len;
        cursor = next_site[cursor];
    }
    return len;
}

std::vector<int> PieceScanner::full_match_sites(const std::vector<Step>& p) const {
    std::vector<int> out;
    const int n = static_cast<int>(p.size());
    for (int si = 0; si < static_cast<int>(sites.size()); ++si)
        if (match_length(si, p) == n) out.push_back(si);
    return out;
}

bool PieceScanner::positions_opposite(int face_index, int p, int q) const {
    const Face2& f = x->faces2()[face_index];
    const int m = static_cast<int>(f.boundary.size());
    if (p == q || p < 0 || q < 0 || p >= m || q >= m) return false;
    const std::string& ep = f.boundary[p].edge;
    const std::string& eq = f.boundary[q].edge;
    for (int pass = 0; pass < 2; ++pass) {
        const int from = pass == 0 ? p : q;
        const int to = pass == 0 ? q : p;
        const int len = ((to - from) % m + m) % m + 1;  // inclusive of both ends
        std::vector<Step> arc;
        arc.reserve(len);
        for (int t = 0; t < len; ++t) arc.push_back(f.boundary[(from + t) % m]);
        for (int t = 1; t + 1 < len; ++t)
            if (arc[t].edge == ep || arc[t].edge == eq) return false;
        if (!(plength_path(arc) > PieceLength::of(3))) return false;
        if (!(plength_path(reversed_path(arc)) > PieceLength::of(3))) return false;
    }
    return true;
}

}  // namespace detail

// --- public API -------------------------------------------------------------

std::vector<Factorization> factorizations(const CellComplex& x, const std::vector<Step>& steps) {
    std::vector<Factorization> out;
    if (steps.empty()) return out;
    detail::PieceScanner sc = detail::PieceScanner::build(x, ReversalPolicy::Agnostic);
    for (int si : sc.full_match_sites(steps)) out.push_back(sc.to_factorization(si));
    return out;
}

std::optional<PieceCertificate> is_piece(const CellComplex& x, const std::vector<Step>& steps,
                                         ReversalPolicy policy) {
    if (steps.empty()) return std::nullopt;
    detail::PieceScanner sc = detail::PieceScanner::build(x, policy);
    std::vector<int> hit = sc.full_match_sites(steps);
    for (std::size_t i = 0; i < hit.size(); ++i)
        for (std::size_t j = i + 1; j < hit.size(); ++j)
            if (sc.site_class[hit[i]] != sc.site_class[hit[j]])
                return PieceCertificate{sc.to_factorization(hit[i]),
                                        sc.to_factorization(hit[j])};
    return std::nullopt;
}

PieceLength piece_length_path(const CellComplex& x, const std::vector<Step>& steps,
                              ReversalPolicy policy) {
    return detail::PieceScanner::build(x, policy).plength_path(steps);
}

PieceLength piece_length_cycle(const CellComplex& x, const std::vector<Step>& cycle,
                               ReversalPolicy policy) {
    return detail::PieceScanner::build(x, policy).plength_cycle(cycle);
}

std::vector<CnViolation> check_cn(const CellComplex& x, int n, ReversalPolicy policy) {
    detail::PieceScanner sc = detail::PieceScanner::build(x, policy);
    std::vector<CnViolation> out;
    for (const Face2& f : x.faces2()) {
        PieceLength pl = sc.plength_cycle(f.boundary);
        if (!pl.unbounded() && pl.value() < n) out.push_back(CnViolation{f.id, pl});
    }
    return out;
}

std::vector<StrictCnViolation> check_strict_cn(const CellComplex& x, int n,
                                               ReversalPolicy policy) {
    detail::PieceScanner sc = detail::PieceScanner::build(x, policy);
    std::vector<StrictCnViolation> out;
    for (const Face2& f : x.faces2()) {
        const int m = static_cast<int>(f.boundary.size());
        auto mod = [m](int v) { return ((v % m) + m) % m; };
        for (int dir : {+1, -1}) {
            for (int start = 0; start < m; ++start) {
                // One full turn plus one step, read around the cell.
                std::vector<Step> wrap;
                wrap.reserve(m + 1);
                for (int t = 0; t <= m; ++t)
                    wrap.push_back(dir > 0 ? f.boundary[mod(start + t)]
                                           : reversed(f.boundary[mod(start - 1 - t)]));
                PieceLength pl = sc.plength_path(wrap);
                if (pl <= PieceLength::of(n))
                    out.push_back(StrictCnViolation{f.id, start, dir, pl});
            }
        }
    }
    return out;
}

std::vector<PetalDecomposition> petal_decompositions(const CellComplex& x,
                                                     const std::string& face_id) {
    const Face2& f = x.face2(face_id);
    const int fi = x.face2_index(face_id);
    const int m = static_cast<int>(f.boundary.size());
    detail::PieceScanner sc = detail::PieceScanner::build(x, ReversalPolicy::Agnostic);

    // Doubled boundary so every cyclic arc is a plain interval.
    std::vector<Step> doubled;
    for (int t = 0; t < 2 * m; ++t) doubled.push_back(f.boundary[t % m]);

    // Longest arc from each start that still reads around some other 2-cell.
    std::vector<int> other_reach(m, 0);
    for (int a = 0; a < m; ++a)
        for (int si = 0; si < static_cast<int>(sc.sites.size()); ++si) {
            if (sc.sites[si].face == fi) continue;
            int len = sc.match_length(si, doubled, a);
            if (a + len > a + m) len = m;
            other_reach[a] = std::max(other_reach[a], len);
        }

    std::vector<PetalDecomposition> out;
    std::vector<int> cuts;
    auto arc_ok = [&](int from, int len) { return len >= 1 && other_reach[from] >= len; };
    std::function<void(int)> grow = [&](int depth) {
        if (depth == 6) {
            if (arc_ok(cuts[5], cuts[0] + m - cuts[5]))
                out.push_back(PetalDecomposition{face_id, cuts});
            return;
        }
        const int lo = depth == 0 ? 0 : cuts[depth - 1] + 1;
        for (int c = lo; c < m; ++c) {
            if (depth > 0 && !arc_ok(cuts[depth - 1], c - cuts[depth - 1])) continue;
            cuts.push_back(c);
            grow(depth + 1);
            cuts.pop_back();
        }
    };
    grow(0);
    return out;
}

bool positions_opposite(const CellComplex& x, const std::string& face_id, int p, int q,
                        ReversalPolicy policy) {
    x.face2(face_id);  // throws for unknown ids
    detail::PieceScanner sc = detail::PieceScanner::build(x, policy);
    return sc.positions_opposite(x.face2_index(face_id), p, q);
}

std::vector<OppositePair> opposite_pairs(const CellComplex& x, const std::string& face_id,
                                         ReversalPolicy policy) {
    const int fi = x.face2_index(face_id);
    const int m = static_cast<int>(x.face2(face_id).boundary.size());
    detail::PieceScanner sc = detail::PieceScanner::build(x, policy);
    std::vector<OppositePair> out;
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q)
            if (sc.positions_opposite(fi, p, q)) out.push_back(OppositePair{p, q});
    return out;
}

std::vector<SubpathViolation> piece_subpath_violations(const CellComplex& x,
                                                       ReversalPolicy policy,
                                                       std::size_t max_reports) {
    detail::PieceScanner sc = detail::PieceScanner::build(x, policy);
    std::vector<SubpathViolation> out;
    std::set<std::vector<Step>> seen;
    for (const Face2& f : x.faces2()) {
        const int m = static_cast<int>(f.boundary.size());
        for (int a = 0; a < m; ++a) {
            std::vector<Step> reading;
            for (int t = 0; t < m; ++t) reading.push_back(f.boundary[(a + t) % m]);
            detail::PieceScanner::PathTable table = sc.analyze(reading);
            for (int len = 2; len <= m; ++len) {
                if (!table.is_piece(0, len)) continue;
                std::vector<Step> piece(reading.begin(), reading.begin() + len);
                std::vector<Step> key = std::min(piece, reversed_path(piece));
                if (!seen.insert(key).second) continue;
                for (int u = 0; u < len && out.size() < max_reports; ++u)
                    for (int l = 1; u + l <= len; ++l) {
                        if (u == 0 && l == len) continue;
                        if (!table.is_piece(u, l)) {
                            out.push_back(SubpathViolation{piece, u, l});
                            if (out.size() >= max_reports) return out;
                        }
                    }
            }
        }
    }
    return out;
}

}  // namespace scw
