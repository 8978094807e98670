// Nerve graphs, link largeness, and honeycomb patches.
//
// The nerve of a complex is its face graph viewed as an abstract graph.
// Local largeness asks that every vertex link (induced neighbour graph)
// contain no induced 4- or 5-cycle, the graph-theoretic shadow of a lower
// curvature bound.  Honeycomb patches are subsets of 2-cells whose mutual
// gluing pattern matches a region of the regular hexagonal tiling; they are
// recognized combinatorially and certified by an explicit coordinate
// assignment, and flat tiling regions can be pulled back from the nerve.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scw/complex.hpp"
#include "scw/metrics.hpp"

namespace scw {

struct NerveGraph {
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;  // a < b, sorted
};

NerveGraph nerve(const CellComplex& x);
NerveGraph nerve_of_graph(const FaceGraph& g);

/// Rebuilds adjacency structure from a serialized nerve.
FaceGraph face_graph_from_nerve(const NerveGraph& n);

struct LinkReport {
    bool six_large = false;
    std::string node;                    // offending node, when not large
    std::vector<std::string> cycle;      // induced C4/C5 witness in its link
    bool aborted = false;                // degree cap exceeded; result unknown
    std::string abort_detail;
};

/// Checks the link of a single node for induced 4- and 5-cycles.  Degree
/// beyond max_degree aborts with a diagnostic instead of running forever;
/// degree <= 3 is clean by counting.
LinkReport link_six_large_node(const FaceGraph& g, int node, int max_degree = 64);

/// Runs link_six_large_node on every node and aggregates.  A genuine short
/// cycle wins over an abort, so a clean verdict means every link was fully
/// checked.
LinkReport link_six_large(const FaceGraph& g, int max_degree = 64);

struct SystolicReport {
    bool ok = false;
    LinkReport link;
    std::vector<std::string> boundary_faces;  // closure contains an edge on < 2 2-cells
    std::vector<std::string> interior_faces;  // d_f >= 2 from every boundary face
};

/// Local largeness plus the boundary/interior split of the face set.
SystolicReport local_systolic_report(const CellComplex& x, const FaceGraph& g);

/// Axial coordinate in the hexagonal tiling.
struct Hex {
    int q = 0, r = 0;
    friend bool operator==(const Hex& a, const Hex& b) { return a.q == b.q && a.r == b.r; }
    friend bool operator<(const Hex& a, const Hex& b) {
        return a.q != b.q ? a.q < b.q : a.r < b.r;
    }
};

struct PatchReport {
    bool ok = false;            // honeycomb combinatorics and ball-shaped
    bool honeycomb = false;     // gluing pattern embeds in the hex tiling
    std::string shape;          // "ball" | "band" | "other" | ""
    int radius = -1;            // when shape == "ball"
    std::string reason;         // first failed check
    std::map<std::string, Hex> coords;  // certificate when honeycomb
    std::vector<MissingCell> missing;   // 3-complement completeness failures
};

/// Decides whether the given 2-cells glue like a region of the hexagonal
/// tiling and, if so, whether the region is a ball.  `faces` must be 2-cell
/// ids of x.
PatchReport is_honeycomb_patch(const CellComplex& x, const std::vector<std::string>& faces,
                               ReversalPolicy policy = ReversalPolicy::Agnostic);

/// Inclusion-maximal ball-shaped honeycomb patches found by growing a
/// graph-ball around each 2-cell.
std::vector<std::vector<std::string>> find_honeycomb_patches(const CellComplex& x,
                                                             ReversalPolicy policy = ReversalPolicy::Agnostic);

struct FlatPullback {
    bool ok = false;
    Subcomplex patch;            // span of the matched 2-cells
    std::string breaking_vertex; // when not ok: where flatness fails
    std::string reason;
};

/// Given a set of nerve nodes claimed to form a flat (triangular-lattice)
/// region, verifies the claim on the nerve and pulls the region back to a
/// 2-complex patch: every interior lattice vertex must be surrounded by six
/// cells whose pairwise overlaps are single arcs arranged in the cyclic
/// order the nerve dictates.
FlatPullback pullback_flat(const CellComplex& x, const FaceGraph& g,
                           const std::vector<std::string>& nodes);

/// Triangular-lattice graph of radius r (nodes = axial hexes, edges between
/// neighbours); the comparison target for flat nerve regions.
FaceGraph tri_skeleton(int r);

}  // namespace scw
