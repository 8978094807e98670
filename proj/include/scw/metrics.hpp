// The face metric: distances, intervals, convexity, hulls.
//
// Faces of a complex are its 2-cells together with its isolated edges (edges
// on no 2-cell).  Two faces are adjacent when their closures share at least
// one vertex; d_f is the path metric of that graph, with unreachable pairs
// at unbounded distance.  Everything here is phrased on an explicit
// FaceGraph so algorithms can also run on subgraphs and serialized graphs.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scw/complex.hpp"
#include "scw/pieces.hpp"

namespace scw {

/// Distance value in the face metric; unbounded for unreachable pairs.
using FaceDist = PieceLength;  // same ordered semantics: integer or unbounded

struct FaceGraph {
    std::vector<std::string> ids;           // faces in deterministic order
    std::map<std::string, int> index;       // id -> position in ids
    std::vector<std::vector<int>> adj;      // sorted neighbour lists
    std::vector<bool> is_two_cell;          // per node: 2-cell vs isolated edge

    int node(const std::string& id) const {
        auto it = index.find(id);
        return it == index.end() ? -1 : it->second;
    }
};

/// Face graph of the whole complex: 2-cells + isolated edges, adjacency by
/// shared vertices of closures.
FaceGraph build_face_graph(const CellComplex& x);

/// BFS distances from a set of source nodes; -1 when unreachable.
std::vector<int> bfs_from(const FaceGraph& g, const std::vector<int>& sources);

FaceDist face_distance(const FaceGraph& g, const std::string& a, const std::string& b);

/// All faces lying on some geodesic between a and b (empty when unreachable).
std::vector<std::string> interval(const FaceGraph& g, const std::string& a,
                                  const std::string& b);

/// d_f-convexity of a subcomplex: for every pair of its metric faces, the
/// ambient interval stays inside its metric faces.  Unreachable pairs are
/// vacuously fine.
bool is_face_convex(const CellComplex& x, const FaceGraph& g, const Subcomplex& sub);

/// Least d_f-convex subcomplex containing sub: closes metric-face pairs
/// under ambient intervals until stable, then spans.  Always returns a
/// closed subcomplex containing sub.
Subcomplex convex_hull(const CellComplex& x, const FaceGraph& g, const Subcomplex& sub);

/// k-quasiconvexity: for faces a, b meeting sub (sharing a vertex with it),
/// every face on an a-b geodesic lies within touch-distance k of sub.
/// Touch-distance of a face is 0 when it meets sub, else the least number of
/// adjacency steps to a face meeting sub.
bool is_k_quasiconvex(const CellComplex& x, const FaceGraph& g, const Subcomplex& sub,
                      int k);

/// Whether some geodesic edge path between two vertices of sub runs entirely
/// inside sub's 1-skeleton while crossing face closures in a fixed order.
/// Precondition: `faces` is a d_f-geodesic face sequence in x (consecutive
/// faces adjacent, length = distance + 1); returns the path when found.
std::optional<std::vector<Step>> exists_trace(const CellComplex& x, const Subcomplex& sub,
                                              const std::string& from_vertex,
                                              const std::string& to_vertex,
                                              const std::vector<std::string>& faces);

/// Completion checks for a subcomplex against ambient 2-cells.  For every
/// 2-cell R outside sub, each decomposition of its attaching cycle into a
/// nontrivial arc Q inside sub and complementary arc S (possibly trivial):
///   Shells      — flags R when piece_length(S) <= bound,
///   Complements — flags R when piece_length(Q) >= bound (unbounded counts).
enum class MissingMode { Shells, Complements };

struct MissingCell {
    std::string face;
    std::vector<Step> arc_in_sub;  // the Q side of the witnessing split
};

std::vector<MissingCell> check_no_missing(const CellComplex& x, const Subcomplex& sub,
                                          MissingMode mode, int bound,
                                          ReversalPolicy policy = ReversalPolicy::Agnostic);

/// Diameter (in the ambient face graph) of the intersection of the two
/// r-neighbourhoods, where the r-neighbourhood of a subcomplex is all faces
/// within member-distance r of its metric faces.  Unbounded when the
/// intersection is empty or disconnected in x.
FaceDist coarse_intersection_diameter(const CellComplex& x, const FaceGraph& g,
                                      const Subcomplex& a, const Subcomplex& b, int r);

/// Faces within member-distance r of sub's metric faces (the r-ball used by
/// coarse_intersection_diameter), exposed for tests.
std::vector<std::string> neighbourhood(const CellComplex& x, const FaceGraph& g,
                                       const Subcomplex& sub, int r);

}  // namespace scw
