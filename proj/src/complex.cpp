// Core complex model: construction, validation, paths/cycles, subcomplexes,
// and the derived incidence tables.  See include/scw/complex.hpp for the
// contracts; nothing here knows about pieces or metrics.

#include "scw/complex.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace scw {

CellComplex::CellComplex(std::vector<std::string> vertices, std::vector<EdgeRec> edges,
                         std::vector<Face2> faces)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), faces_(std::move(faces)) {
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i)
        vindex_.emplace(vertices_[i], i);  // first occurrence wins; validate() reports dups
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
        eindex_.emplace(edges_[i].id, i);
    for (int i = 0; i < static_cast<int>(faces_.size()); ++i)
        findex_.emplace(faces_[i].id, i);
}

int CellComplex::vertex_index(const std::string& id) const {
    auto it = vindex_.find(id);
    return it == vindex_.end() ? -1 : it->second;
}

int CellComplex::edge_index(const std::string& id) const {
    auto it = eindex_.find(id);
    return it == eindex_.end() ? -1 : it->second;
}

int CellComplex::face2_index(const std::string& id) const {
    auto it = findex_.find(id);
    return it == findex_.end() ? -1 : it->second;
}

const EdgeRec& CellComplex::edge(const std::string& id) const {
    int i = edge_index(id);
    if (i < 0) throw std::out_of_range("no such edge: " + id);
    return edges_[i];
}

const Face2& CellComplex::face2(const std::string& id) const {
    int i = face2_index(id);
    if (i < 0) throw std::out_of_range("no such 2-cell: " + id);
    return faces_[i];
}

const std::string& CellComplex::step_src(const Step& s) const {
    const EdgeRec& e = edge(s.edge);
    return s.dir > 0 ? e.src : e.dst;
}

const std::string& CellComplex::step_dst(const Step& s) const {
    const EdgeRec& e = edge(s.edge);
    return s.dir > 0 ? e.dst : e.src;
}

std::vector<ValidationIssue> validate(const CellComplex& x) {
    std::vector<ValidationIssue> issues;
    auto flag = [&issues](const std::string& code, const std::string& detail) {
        issues.push_back(ValidationIssue{code, detail});
    };

    std::set<std::string> seen;
    for (const std::string& v : x.vertices())
        if (!seen.insert(v).second) flag("dup-vertex", v);
    seen.clear();
    for (const EdgeRec& e : x.edges()) {
        if (!seen.insert(e.id).second) flag("dup-edge", e.id);
        if (!x.has_vertex(e.src)) flag("bad-edge-src", e.id + " -> " + e.src);
        if (!x.has_vertex(e.dst)) flag("bad-edge-dst", e.id + " -> " + e.dst);
    }
    seen.clear();
    for (const Face2& f : x.faces2()) {
        if (!seen.insert(f.id).second) flag("dup-face", f.id);
        if (f.boundary.empty()) {
            flag("empty-boundary", f.id);
            continue;
        }
        bool refs_ok = true;
        for (const Step& s : f.boundary) {
            if (s.dir != 1 && s.dir != -1) {
                flag("bad-dir", f.id + " uses dir " + std::to_string(s.dir));
                refs_ok = false;
            }
            if (!x.has_edge(s.edge)) {
                flag("unknown-edge", f.id + " uses " + s.edge);
                refs_ok = false;
            }
        }
        if (!refs_ok) continue;
        const std::size_t n = f.boundary.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Step& cur = f.boundary[i];
            const Step& nxt = f.boundary[(i + 1) % n];
            if (x.step_dst(cur) != x.step_src(nxt))
                flag("not-closed", f.id + " between positions " + std::to_string(i) +
                                       " and " + std::to_string((i + 1) % n));
            if (nxt == reversed(cur) && n > 1)
                flag("not-immersed", f.id + " backtracks at position " + std::to_string(i));
        }
    }
    return issues;
}

// --- paths and cycles -------------------------------------------------------

bool is_path(const CellComplex& x, const std::vector<Step>& steps) {
    for (const Step& s : steps) {
        if (!x.has_edge(s.edge)) return false;
        if (s.dir != 1 && s.dir != -1) return false;
    }
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
        if (x.step_dst(steps[i]) != x.step_src(steps[i + 1])) return false;
    return true;
}

bool is_immersed_path(const CellComplex& x, const std::vector<Step>& steps) {
    if (!is_path(x, steps)) return false;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
        if (steps[i + 1] == reversed(steps[i])) return false;
    return true;
}

bool is_immersed_cycle(const CellComplex& x, const std::vector<Step>& steps) {
    if (steps.empty()) return false;
    if (!is_immersed_path(x, steps)) return false;
    if (x.step_dst(steps.back()) != x.step_src(steps.front())) return false;
    return steps.size() == 1 || steps.front() != reversed(steps.back());
}

std::vector<Step> reversed_path(const std::vector<Step>& steps) {
    std::vector<Step> out(steps.rbegin(), steps.rend());
    for (Step& s : out) s = reversed(s);
    return out;
}

std::vector<Step> canonical_rotation(const std::vector<Step>& cycle) {
    const std::size_t n = cycle.size();
    if (n == 0) return {};
    auto rotated = [&cycle, n](std::size_t r) {
        std::vector<Step> out;
        out.reserve(n);
        for (std::size_t j = 0; j < n; ++j) out.push_back(cycle[(r + j) % n]);
        return out;
    };
    std::vector<Step> best = rotated(0);
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Step> cand = rotated(r);
        if (std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end()))
            best = cand;
    }
    return best;
}

std::vector<Step> cycle_key(const std::vector<Step>& cycle, ReversalPolicy policy) {
    std::vector<Step> key = canonical_rotation(cycle);
    if (policy == ReversalPolicy::Agnostic) {
        std::vector<Step> rkey = canonical_rotation(reversed_path(cycle));
        if (std::lexicographical_compare(rkey.begin(), rkey.end(), key.begin(), key.end()))
            key = rkey;
    }
    return key;
}

bool cycles_equivalent(const std::vector<Step>& a, const std::vector<Step>& b,
                       ReversalPolicy policy) {
    return cycle_key(a, policy) == cycle_key(b, policy);
}

CellComplex subdivide_edge(const CellComplex& x, const std::string& id, int k) {
    if (k < 1) throw std::invalid_argument("subdivision count must be >= 1");
    if (!x.has_edge(id)) throw std::out_of_range("no such edge: " + id);
    if (k == 1) return x;

    const EdgeRec& old = x.edge(id);
    std::vector<std::string> vs = x.vertices();
    std::vector<std::string> mid;
    for (int i = 1; i < k; ++i) {
        mid.push_back(id + "#v" + std::to_string(i));
        vs.push_back(mid.back());
    }
    std::vector<std::string> seg;
    for (int i = 1; i <= k; ++i) seg.push_back(id + "#s" + std::to_string(i));

    std::vector<EdgeRec> es;
    for (const EdgeRec& e : x.edges()) {
        if (e.id != id) {
            es.push_back(e);
            continue;
        }
        for (int i = 0; i < k; ++i) {
            const std::string& a = (i == 0) ? old.src : mid[i - 1];
            const std::string& b = (i == k - 1) ? old.dst : mid[i];
            es.push_back(EdgeRec{seg[i], a, b});
        }
    }

    std::vector<Face2> fs;
    for (const Face2& f : x.faces2()) {
        Face2 g{f.id, {}};
        for (const Step& s : f.boundary) {
            if (s.edge != id) {
                g.boundary.push_back(s);
            } else if (s.dir > 0) {
                for (int i = 0; i < k; ++i) g.boundary.push_back(Step{seg[i], 1});
            } else {
                for (int i = k - 1; i >= 0; --i) g.boundary.push_back(Step{seg[i], -1});
            }
        }
        fs.push_back(g);
    }
    return CellComplex(vs, es, fs);
}

// --- subcomplexes -----------------------------------------------------------

bool is_subcomplex(const CellComplex& x, const Subcomplex& sub) {
    for (const std::string& v : sub.vertices)
        if (!x.has_vertex(v)) return false;
    for (const std::string& e : sub.edges) {
        if (!x.has_edge(e)) return false;
        const EdgeRec& rec = x.edge(e);
        if (!sub.contains_vertex(rec.src) || !sub.contains_vertex(rec.dst)) return false;
    }
    for (const std::string& f : sub.faces) {
        if (!x.has_face2(f)) return false;
        for (const Step& s : x.face2(f).boundary)
            if (!sub.contains_edge(s.edge)) return false;
    }
    return true;
}

Subcomplex close_cells(const CellComplex& x, const Subcomplex& cells) {
    Subcomplex out = cells;
    for (const std::string& f : out.faces)
        for (const Step& s : x.face2(f).boundary) out.edges.insert(s.edge);
    for (const std::string& e : out.edges) {
        const EdgeRec& rec = x.edge(e);
        out.vertices.insert(rec.src);
        out.vertices.insert(rec.dst);
    }
    return out;
}

Subcomplex span_faces(const CellComplex& x, const std::vector<std::string>& face_ids) {
    Subcomplex cells;
    for (const std::string& f : face_ids) {
        if (x.has_face2(f))
            cells.faces.insert(f);
        else if (x.has_edge(f))
            cells.edges.insert(f);  // isolated-edge faces are legal here too
        else
            throw std::out_of_range("no such face: " + f);
    }
    return close_cells(x, cells);
}

Subcomplex subcomplex_union(const Subcomplex& a, const Subcomplex& b) {
    Subcomplex out = a;
    out.vertices.insert(b.vertices.begin(), b.vertices.end());
    out.edges.insert(b.edges.begin(), b.edges.end());
    out.faces.insert(b.faces.begin(), b.faces.end());
    return out;
}

Subcomplex subcomplex_intersection(const Subcomplex& a, const Subcomplex& b) {
    Subcomplex out;
    std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                          b.vertices.end(), std::inserter(out.vertices, out.vertices.end()));
    std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                          std::inserter(out.edges, out.edges.end()));
    std::set_intersection(a.faces.begin(), a.faces.end(), b.faces.begin(), b.faces.end(),
                          std::inserter(out.faces, out.faces.end()));
    return out;
}

std::vector<Subcomplex> subcomplex_components(const CellComplex& x, const Subcomplex& sub) {
    // Cells of every dimension are nodes; incidence (endpoint / boundary
    // edge) is adjacency.  Encode nodes as (dim, id).
    using Node = std::pair<int, std::string>;
    std::set<Node> todo;
    for (const std::string& v : sub.vertices) todo.insert({0, v});
    for (const std::string& e : sub.edges) todo.insert({1, e});
    for (const std::string& f : sub.faces) todo.insert({2, f});

    // vertex -> incident sub-edges, edge -> incident sub-faces
    std::map<std::string, std::vector<std::string>> v_edges, e_faces;
    for (const std::string& e : sub.edges) {
        const EdgeRec& rec = x.edge(e);
        v_edges[rec.src].push_back(e);
        v_edges[rec.dst].push_back(e);
    }
    for (const std::string& f : sub.faces)
        for (const Step& s : x.face2(f).boundary) e_faces[s.edge].push_back(f);

    std::vector<Subcomplex> out;
    while (!todo.empty()) {
        Subcomplex comp;
        std::queue<Node> q;
        q.push(*todo.begin());
        todo.erase(todo.begin());
        while (!q.empty()) {
            auto [dim, id] = q.front();
            q.pop();
            auto visit = [&](int d, const std::string& cid) {
                Node n{d, cid};
                auto it = todo.find(n);
                if (it != todo.end()) {
                    todo.erase(it);
                    q.push(n);
                }
            };
            if (dim == 0) {
                comp.vertices.insert(id);
                auto it = v_edges.find(id);
                if (it != v_edges.end())
                    for (const std::string& e : it->second) visit(1, e);
            } else if (dim == 1) {
                comp.edges.insert(id);
                const EdgeRec& rec = x.edge(id);
                visit(0, rec.src);
                visit(0, rec.dst);
                auto it = e_faces.find(id);
                if (it != e_faces.end())
                    for (const std::string& f : it->second) visit(2, f);
            } else {
                comp.faces.insert(id);
                for (const Step& s : x.face2(id).boundary) visit(1, s.edge);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::string> metric_faces_of(const CellComplex& x, const Subcomplex& sub) {
    std::set<std::string> covered;  // edges lying on some ambient 2-cell
    for (const Face2& f : x.faces2())
        for (const Step& s : f.boundary) covered.insert(s.edge);
    std::vector<std::string> out;
    for (const Face2& f : x.faces2())
        if (sub.contains_face(f.id)) out.push_back(f.id);
    for (const EdgeRec& e : x.edges())
        if (sub.contains_edge(e.id) && !covered.count(e.id)) out.push_back(e.id);
    return out;
}

// --- derived incidence tables ----------------------------------------------

IncidenceIndex IncidenceIndex::build(const CellComplex& x) {
    IncidenceIndex idx;
    idx.edge_faces.assign(x.edges().size(), {});
    idx.vertex_faces.assign(x.vertices().size(), {});
    idx.vertex_edges.assign(x.vertices().size(), {});
    for (int ei = 0; ei < static_cast<int>(x.edges().size()); ++ei) {
        const EdgeRec& e = x.edges()[ei];
        idx.vertex_edges[x.vertex_index(e.src)].push_back(ei);
        if (e.dst != e.src) idx.vertex_edges[x.vertex_index(e.dst)].push_back(ei);
    }
    for (int fi = 0; fi < static_cast<int>(x.faces2().size()); ++fi) {
        std::set<int> edge_set, vert_set;
        for (const Step& s : x.faces2()[fi].boundary) {
            int ei = x.edge_index(s.edge);
            edge_set.insert(ei);
            vert_set.insert(x.vertex_index(x.edges()[ei].src));
            vert_set.insert(x.vertex_index(x.edges()[ei].dst));
        }
        for (int ei : edge_set) idx.edge_faces[ei].push_back(fi);
        for (int vi : vert_set) idx.vertex_faces[vi].push_back(fi);
    }
    return idx;
}

bool edge_isolated(const IncidenceIndex& idx, int edge_index) {
    return idx.edge_faces[edge_index].empty();
}

}  // namespace scw
