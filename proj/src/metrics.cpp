// Face metric: graph construction, distances/intervals, convexity and hulls,
// quasiconvexity, traces, completion checks, coarse intersections.

#include "scw/metrics.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "piece_scan.hpp"

namespace scw {

namespace {

// Vertices in the closure of a graph node (2-cell or isolated edge).
std::vector<int> closure_vertices(const CellComplex& x, const FaceGraph& g, int node) {
    std::set<int> vs;
    if (g.is_two_cell[node]) {
        for (const Step& s : x.face2(g.ids[node]).boundary) {
            const EdgeRec& e = x.edge(s.edge);
            vs.insert(x.vertex_index(e.src));
            vs.insert(x.vertex_index(e.dst));
        }
    } else {
        const EdgeRec& e = x.edge(g.ids[node]);
        vs.insert(x.vertex_index(e.src));
        vs.insert(x.vertex_index(e.dst));
    }
    return {vs.begin(), vs.end()};
}

// Edge ids in the closure of a graph node.
std::vector<std::string> closure_edges(const CellComplex& x, const FaceGraph& g, int node) {
    if (!g.is_two_cell[node]) return {g.ids[node]};
    std::set<std::string> es;
    for (const Step& s : x.face2(g.ids[node]).boundary) es.insert(s.edge);
    return {es.begin(), es.end()};
}

std::vector<int> nodes_of(const FaceGraph& g, const std::vector<std::string>& ids) {
    std::vector<int> out;
    for (const std::string& id : ids) {
        int n = g.node(id);
        if (n >= 0) out.push_back(n);
    }
    return out;
}

}  // namespace

FaceGraph build_face_graph(const CellComplex& x) {
    FaceGraph g;
    IncidenceIndex inc = IncidenceIndex::build(x);
    for (const Face2& f : x.faces2()) {
        g.index.emplace(f.id, static_cast<int>(g.ids.size()));
        g.ids.push_back(f.id);
        g.is_two_cell.push_back(true);
    }
    for (int ei = 0; ei < static_cast<int>(x.edges().size()); ++ei)
        if (edge_isolated(inc, ei)) {
            g.index.emplace(x.edges()[ei].id, static_cast<int>(g.ids.size()));
            g.ids.push_back(x.edges()[ei].id);
            g.is_two_cell.push_back(false);
        }

    // Nodes are adjacent when their closures share a vertex.
    std::vector<std::vector<int>> at_vertex(x.vertices().size());
    for (int n = 0; n < static_cast<int>(g.ids.size()); ++n)
        for (int vi : closure_vertices(x, g, n)) at_vertex[vi].push_back(n);
    std::vector<std::set<int>> nbr(g.ids.size());
    for (const std::vector<int>& nodes : at_vertex)
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                nbr[nodes[i]].insert(nodes[j]);
                nbr[nodes[j]].insert(nodes[i]);
            }
    g.adj.resize(g.ids.size());
    for (std::size_t n = 0; n < nbr.size(); ++n) g.adj[n].assign(nbr[n].begin(), nbr[n].end());
    return g;
}

std::vector<int> bfs_from(const FaceGraph& g, const std::vector<int>& sources) {
    std::vector<int> dist(g.ids.size(), -1);
    std::queue<int> q;
    for (int s : sources)
        if (s >= 0 && dist[s] < 0) {
            dist[s] = 0;
            q.push(s);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

FaceDist face_distance(const FaceGraph& g, const std::string& a, const std::string& b) {
    int na = g.node(a), nb = g.node(b);
    if (na < 0 || nb < 0) return FaceDist::bot();
    std::vector<int> dist = bfs_from(g, {na});
    return dist[nb] < 0 ? FaceDist::bot() : FaceDist::of(dist[nb]);
}

std::vector<std::string> interval(const FaceGraph& g, const std::string& a,
                                  const std::string& b) {
    int na = g.node(a), nb = g.node(b);
    std::vector<std::string> out;
    if (na < 0 || nb < 0) return out;
    std::vector<int> da = bfs_from(g, {na});
    std::vector<int> db = bfs_from(g, {nb});
    if (da[nb] < 0) return out;
    const int d = da[nb];
    for (int n = 0; n < static_cast<int>(g.ids.size()); ++n)
        if (da[n] >= 0 && db[n] >= 0 && da[n] + db[n] == d) out.push_back(g.ids[n]);
    return out;
}

bool is_face_convex(const CellComplex& x, const FaceGraph& g, const Subcomplex& sub) {
    std::vector<int> members = nodes_of(g, metric_faces_of(x, sub));
    std::set<int> member_set(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::vector<int> da = bfs_from(g, {members[i]});
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (da[members[j]] < 0) continue;  // unreachable pairs are vacuous
            std::vector<int> db = bfs_from(g, {members[j]});
            const int d = da[members[j]];
            for (int n = 0; n < static_cast<int>(g.ids.size()); ++n)
                if (da[n] >= 0 && db[n] >= 0 && da[n] + db[n] == d && !member_set.count(n))
                    return false;
        }
    }
    return true;
}

Subcomplex convex_hull(const CellComplex& x, const FaceGraph& g, const Subcomplex& sub) {
    std::set<int> members;
    for (int n : nodes_of(g, metric_faces_of(x, sub))) members.insert(n);

    std::map<int, std::vector<int>> dist_cache;
    auto dist_from = [&](int n) -> const std::vector<int>& {
        auto it = dist_cache.find(n);
        if (it == dist_cache.end()) it = dist_cache.emplace(n, bfs_from(g, {n})).first;
        return it->second;
    };

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> current(members.begin(), members.end());
        for (std::size_t i = 0; i < current.size() && !grew; ++i) {
            const std::vector<int>& da = dist_from(current[i]);
            for (std::size_t j = i + 1; j < current.size() && !grew; ++j) {
                if (da[current[j]] < 0) continue;
                const std::vector<int>& db = dist_from(current[j]);
                const int d = da[current[j]];
                for (int n = 0; n < static_cast<int>(g.ids.size()); ++n)
                    if (da[n] >= 0 && db[n] >= 0 && da[n] + db[n] == d &&
                        !members.count(n)) {
                        members.insert(n);
                        grew = true;
                    }
            }
        }
    }

    std::vector<std::string> ids;
    for (int n : members) ids.push_back(g.ids[n]);
    return subcomplex_union(span_faces(x, ids), sub);
}

bool is_k_quasiconvex(const CellComplex& x, const FaceGraph& g, const Subcomplex& sub,
                      int k) {
    // Faces meeting sub: closure shares a vertex with sub.
    std::vector<int> meeting;
    for (int n = 0; n < static_cast<int>(g.ids.size()); ++n)
        for (int vi : closure_vertices(x, g, n))
            if (sub.contains_vertex(x.vertices()[vi])) {
                meeting.push_back(n);
                break;
            }
    std::vector<int> touch = bfs_from(g, meeting);

    std::map<int, std::vector<int>> dist_cache;
    auto dist_from = [&](int n) -> const std::vector<int>& {
        auto it = dist_cache.find(n);
        if (it == dist_cache.end()) it = dist_cache.emplace(n, bfs_from(g, {n})).first;
        return it->second;
    };
    for (std::size_t i = 0; i < meeting.size(); ++i) {
        const std::vector<int>& da = dist_from(meeting[i]);
        for (std::size_t j = i + 1; j < meeting.size(); ++j) {
            if (da[meeting[j]] < 0) continue;
            const std::vector<int>& db = dist_from(meeting[j]);
            const int d = da[meeting[j]];
            for (int n = 0; n < static_cast<int>(g.ids.size()); ++n)
                if (da[n] >= 0 && db[n] >= 0 && da[n] + db[n] == d)
                    if (touch[n] < 0 || touch[n] > k) return false;
        }
    }
    return true;
}

std::optional<std::vector<Step>> exists_trace(const CellComplex& x, const Subcomplex& sub,
                                              const std::string& from_vertex,
                                              const std::string& to_vertex,
                                              const std::vector<std::string>& faces) {
    if (faces.empty()) return std::nullopt;
    FaceGraph g = build_face_graph(x);
    const int m = static_cast<int>(faces.size());
    for (const std::string& f : faces)
        if (g.node(f) < 0) return std::nullopt;
    for (int i = 0; i + 1 < m; ++i) {
        const std::vector<int>& nb = g.adj[g.node(faces[i])];
        if (!std::binary_search(nb.begin(), nb.end(), g.node(faces[i + 1])))
            return std::nullopt;
    }
    FaceDist d = face_distance(g, faces.front(), faces.back());
    if (d.unbounded() || d.value() != m - 1) return std::nullopt;  // not a geodesic sequence
    if (!sub.contains_vertex(from_vertex) || !sub.contains_vertex(to_vertex))
        return std::nullopt;

    // Per segment: vertices of the carrying face's closure, and its sub-edges.
    std::vector<std::set<std::string>> seg_verts(m);
    std::vector<std::vector<std::string>> seg_edges(m);
    for (int j = 0; j < m; ++j) {
        int n = g.node(faces[j]);
        for (int vi : closure_vertices(x, g, n)) seg_verts[j].insert(x.vertices()[vi]);
        for (const std::string& e : closure_edges(x, g, n))
            if (sub.contains_edge(e)) seg_edges[j].push_back(e);
    }
    if (!seg_verts[0].count(from_vertex)) return std::nullopt;

    // BFS over (segment, vertex, incoming dart); the dart persists across
    // segment advances so backtracking is banned globally.
    using State = std::tuple<int, std::string, int>;  // dart: edge*2+(dir<0), -1 none
    std::map<State, std::pair<State, Step>> parent;   // step meaningful when edge != ""
    std::set<State> seen;
    std::queue<State> q;
    State start{0, from_vertex, -1};
    seen.insert(start);
    q.push(start);
    std::optional<State> accept;
    while (!q.empty() && !accept) {
        State cur = q.front();
        q.pop();
        auto [j, v, dart] = cur;
        if (j == m - 1 && v == to_vertex) {
            accept = cur;
            break;
        }
        auto push = [&](const State& nxt, const Step& via) {
            if (seen.insert(nxt).second) {
                parent.emplace(nxt, std::make_pair(cur, via));
                q.push(nxt);
            }
        };
        if (j + 1 < m && seg_verts[j + 1].count(v))
            push(State{j + 1, v, dart}, Step{"", 0});
        for (const std::string& eid : seg_edges[j]) {
            const EdgeRec& e = x.edge(eid);
            for (int dir : {+1, -1}) {
                const std::string& s = dir > 0 ? e.src : e.dst;
                const std::string& t = dir > 0 ? e.dst : e.src;
                if (s != v) continue;
                int code = x.edge_index(eid) * 2 + (dir < 0 ? 1 : 0);
                // no immediate backtracking over the previous dart
                if (dart >= 0 && (dart ^ 1) == code) continue;
                push(State{j, t, code}, Step{eid, dir});
            }
        }
    }
    if (!accept) return std::nullopt;
    std::vector<Step> path;
    State cur = *accept;
    while (!(cur == start)) {
        auto it = parent.find(cur);
        if (it->second.second.edge != "") path.push_back(it->second.second);
        cur = it->second.first;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<MissingCell> check_no_missing(const CellComplex& x, const Subcomplex& sub,
                                          MissingMode mode, int bound,
                                          ReversalPolicy policy) {
    detail::PieceScanner sc = detail::PieceScanner::build(x, policy);
    std::vector<MissingCell> out;
    std::set<std::pair<std::string, std::vector<Step>>> seen;
    for (const Face2& f : x.faces2()) {
        if (sub.contains_face(f.id)) continue;
        const int m = static_cast<int>(f.boundary.size());
        for (int a = 0; a < m; ++a) {
            std::vector<Step> p;
            p.reserve(m);
            for (int t = 0; t < m; ++t) p.push_back(f.boundary[(a + t) % m]);
            int max_in_sub = 0;
            while (max_in_sub < m && sub.contains_edge(p[max_in_sub].edge)) ++max_in_sub;
            if (max_in_sub == 0) continue;
            std::vector<PieceLength> qpl, spl;
            if (mode == MissingMode::Complements) qpl = sc.prefix_plengths(p);
            else spl = sc.suffix_plengths(p);
            for (int len = 1; len <= max_in_sub; ++len) {
                const bool bad = mode == MissingMode::Shells
                                     ? spl[len] <= PieceLength::of(bound)
                                     : qpl[len] >= PieceLength::of(bound);
                if (!bad) continue;
                std::vector<Step> arc(p.begin(), p.begin() + len);
                if (seen.emplace(f.id, arc).second)
                    out.push_back(MissingCell{f.id, std::move(arc)});
            }
        }
    }
    return out;
}

std::vector<std::string> neighbourhood(const CellComplex& x, const FaceGraph& g,
                                       const Subcomplex& sub, int r) {
    std::vector<int> dist = bfs_from(g, nodes_of(g, metric_faces_of(x, sub)));
    std::vector<std::string> out;
    for (int n = 0; n < static_cast<int>(g.ids.size()); ++n)
        if (dist[n] >= 0 && dist[n] <= r) out.push_back(g.ids[n]);
    return out;
}

FaceDist coarse_intersection_diameter(const CellComplex& x, const FaceGraph& g,
                                      const Subcomplex& a, const Subcomplex& b, int r) {
    std::vector<std::string> na = neighbourhood(x, g, a, r);
    std::vector<std::string> nb = neighbourhood(x, g, b, r);
    std::set<std::string> bset(nb.begin(), nb.end());
    std::vector<int> common;
    for (const std::string& id : na)
        if (bset.count(id)) common.push_back(g.node(id));
    if (common.empty()) return FaceDist::bot();
    int diam = 0;
    for (int n : common) {
        std::vector<int> dist = bfs_from(g, {n});
        for (int other : common) {
            if (dist[other] < 0) return FaceDist::bot();
            diam = std::max(diam, dist[other]);
        }
    }
    return FaceDist::of(diam);
}

}  // namespace scw
