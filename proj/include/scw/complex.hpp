// Core data model: finite combinatorial 2-complexes.
//
// A complex is a set of vertices, directed edges, and 2-cells whose attaching
// maps are closed immersed edge cycles.  Cells are identified by opaque string
// ids; two distinct 2-cells may share the same boundary cycle.  There is no
// geometry anywhere in this layer — everything downstream (piece lengths,
// face metrics, walls, nerves) is derived from incidence alone.
//
// Complexes are immutable after construction.  Algorithms that need derived
// incidence tables build an IncidenceIndex on the side instead of mutating
// the complex.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scw {

/// One step of an edge path: an edge traversed forward (+1) or backward (-1).
struct Step {
    std::string edge;
    int dir = +1;

    friend bool operator==(const Step& a, const Step& b) {
        return a.dir == b.dir && a.edge == b.edge;
    }
    friend bool operator!=(const Step& a, const Step& b) { return !(a == b); }
    friend bool operator<(const Step& a, const Step& b) {
        if (a.edge != b.edge) return a.edge < b.edge;
        return a.dir > b.dir;  // forward sorts before backward
    }
};

/// Reverses a single step.
inline Step reversed(const Step& s) { return Step{s.edge, -s.dir}; }

struct EdgeRec {
    std::string id;
    std::string src;
    std::string dst;
};

/// A 2-cell: id plus attaching cycle (closed, immersed; checked by validate()).
struct Face2 {
    std::string id;
    std::vector<Step> boundary;
};

/// Governs when a path and its reverse count as the same object, and whether
/// isomorphisms between boundary cycles may reverse orientation.  The
/// orientation-agnostic default identifies mirror images; the restricted
/// policy keeps them distinct, which admits *more* pieces because a pair of
/// factorizations winding opposite ways can then never be identified.
enum class ReversalPolicy { Agnostic, OrientationPreserving };

class CellComplex {
  public:
    CellComplex() = default;
    CellComplex(std::vector<std::string> vertices,
                std::vector<EdgeRec> edges,
                std::vector<Face2> faces);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<EdgeRec>& edges() const { return edges_; }
    const std::vector<Face2>& faces2() const { return faces_; }

    bool has_vertex(const std::string& id) const { return vindex_.count(id) != 0; }
    bool has_edge(const std::string& id) const { return eindex_.count(id) != 0; }
    bool has_face2(const std::string& id) const { return findex_.count(id) != 0; }

    /// Index lookups; -1 when absent.
    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;
    int face2_index(const std::string& id) const;

    const EdgeRec& edge(const std::string& id) const;
    const Face2& face2(const std::string& id) const;

    /// Source/target vertex of a step, honouring the traversal direction.
    const std::string& step_src(const Step& s) const;
    const std::string& step_dst(const Step& s) const;

    std::size_t cell_count() const {
        return vertices_.size() + edges_.size() + faces_.size();
    }

  private:
    std::vector<std::string> vertices_;
    std::vector<EdgeRec> edges_;
    std::vector<Face2> faces_;
    std::map<std::string, int> vindex_, eindex_, findex_;
};

struct ValidationIssue {
    std::string code;    // stable machine-readable tag
    std::string detail;  // human-readable specifics
};

/// Structural invariants: unique ids, resolvable references, closed immersed
/// nonempty boundary cycles.  Returns all violations (empty = valid).
std::vector<ValidationIssue> validate(const CellComplex& x);

// --- paths and cycles -------------------------------------------------------

/// An edge path; may be trivial, in which case it is anchored at a vertex.
struct EdgePath {
    std::vector<Step> steps;
    std::string anchor;  // meaningful only when steps is empty

    bool trivial() const { return steps.empty(); }
};

/// True when consecutive steps are head-to-tail in x.
bool is_path(const CellComplex& x, const std::vector<Step>& steps);
/// True when the path additionally never immediately backtracks.
bool is_immersed_path(const CellComplex& x, const std::vector<Step>& steps);
/// Closed + immersed, including across the wrap-around point.
bool is_immersed_cycle(const CellComplex& x, const std::vector<Step>& steps);

std::vector<Step> reversed_path(const std::vector<Step>& steps);

/// Lexicographically least rotation of a cyclic step sequence.
std::vector<Step> canonical_rotation(const std::vector<Step>& cycle);

/// Rotation equivalence of cycles; under the agnostic policy a cycle is also
/// equivalent to its reversal.
bool cycles_equivalent(const std::vector<Step>& a, const std::vector<Step>& b,
                       ReversalPolicy policy = ReversalPolicy::Agnostic);

/// Canonical key for a cycle under the policy (used for multiset matching).
std::vector<Step> cycle_key(const std::vector<Step>& cycle,
                            ReversalPolicy policy = ReversalPolicy::Agnostic);

/// Returns a copy of x with edge `id` subdivided into k >= 1 segments.
/// Fresh vertices/edges are named "<id>#v1.." / "<id>#s1..", and every face
/// boundary through the edge is rewritten.  Face ids are untouched, so for
/// edges lying on 2-cells the face set and its adjacency are preserved.
CellComplex subdivide_edge(const CellComplex& x, const std::string& id, int k);

// --- subcomplexes -----------------------------------------------------------

/// A subcomplex as explicit cell-id sets.  Operations that produce
/// subcomplexes always return closed ones (closed under boundary).
struct Subcomplex {
    std::set<std::string> vertices;
    std::set<std::string> edges;
    std::set<std::string> faces;  // 2-cell ids

    bool contains_vertex(const std::string& id) const { return vertices.count(id) != 0; }
    bool contains_edge(const std::string& id) const { return edges.count(id) != 0; }
    bool contains_face(const std::string& id) const { return faces.count(id) != 0; }
    bool empty() const { return vertices.empty() && edges.empty() && faces.empty(); }

    friend bool operator==(const Subcomplex& a, const Subcomplex& b) {
        return a.vertices == b.vertices && a.edges == b.edges && a.faces == b.faces;
    }
};

/// True when sub's cells all exist in x and sub is closed under boundary.
bool is_subcomplex(const CellComplex& x, const Subcomplex& sub);

/// Smallest closed subcomplex containing the given 2-cells.
Subcomplex span_faces(const CellComplex& x, const std::vector<std::string>& face_ids);

/// Smallest closed subcomplex containing the given cells of any dimension.
Subcomplex close_cells(const CellComplex& x, const Subcomplex& cells);

Subcomplex subcomplex_union(const Subcomplex& a, const Subcomplex& b);
Subcomplex subcomplex_intersection(const Subcomplex& a, const Subcomplex& b);

/// Connected components of sub under cell incidence (vertex <-> edge <-> face).
std::vector<Subcomplex> subcomplex_components(const CellComplex& x, const Subcomplex& sub);

/// The faces of sub as seen by the ambient face metric: sub's 2-cells plus
/// sub's edges that are isolated in x (edges lying on no 2-cell of x).  Edges
/// covered by an ambient 2-cell are not nodes of the ambient face graph even
/// if no 2-cell of sub covers them.
std::vector<std::string> metric_faces_of(const CellComplex& x, const Subcomplex& sub);

// --- derived incidence tables ----------------------------------------------

/// Side tables most algorithms want; built once per complex by the caller.
struct IncidenceIndex {
    // Per edge index: indices of the 2-cells whose boundary uses the edge
    // (each face listed once even if the edge occurs several times).
    std::vector<std::vector<int>> edge_faces;
    // Per vertex index: indices of 2-cells whose closed cell contains it.
    std::vector<std::vector<int>> vertex_faces;
    // Per vertex index: edge indices incident to it.
    std::vector<std::vector<int>> vertex_edges;

    static IncidenceIndex build(const CellComplex& x);
};

/// True when the edge lies on no 2-cell (an edge-face of the complex).
bool edge_isolated(const IncidenceIndex& idx, int edge_index);

}  // namespace scw
