// Walls, carriers, halfspaces, and wall segments.
//
// A wall is a set of edges closed under taking opposites: whenever a 2-cell
// meets the set, it does so in zero edges or in a pair of opposite ones
// (opposite in the piece-length sense of pieces.hpp).  extend_to_wall grows
// an edge set to such a closure deterministically; when a forced choice has
// no opposite partner available the growth continues with a recorded
// conflict and the result is only a semi-wall.  Halfspaces come from
// deleting the carrier and flood-filling what remains.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scw/complex.hpp"
#include "scw/metrics.hpp"
#include "scw/pieces.hpp"

namespace scw {

struct WallLogEntry {
    std::string face;    // 2-cell that forced the extension
    std::string chosen;  // edge added for it
};

struct WallConflict {
    std::string face;   // 2-cell meeting the set in a non-opposite configuration
    std::string edge;   // the set edge that exposed it
};

struct Wall {
    std::vector<std::string> edges;  // sorted
    std::string kind;                // "wall" | "semi-wall"
    std::vector<WallLogEntry> log;
    std::vector<WallConflict> conflicts;
};

/// Grows `seed` to a wall: repeatedly pick the least 2-cell (by id) meeting
/// the set in exactly one edge and add the least opposite partner that does
/// not immediately create a non-opposite configuration; when only conflicting
/// partners exist, add the least one anyway and record the conflict.
/// Terminates because the edge set only grows.
Wall extend_to_wall(const CellComplex& x, const std::vector<std::string>& seed,
                    ReversalPolicy policy = ReversalPolicy::Agnostic);

/// All closures reachable from the seed by varying which opposite partner is
/// chosen at each forced step (cells still processed in canonical order).
/// Deduplicated by edge set; capped to keep enumeration finite in practice.
std::vector<Wall> enumerate_walls(const CellComplex& x, const std::vector<std::string>& seed,
                                  ReversalPolicy policy = ReversalPolicy::Agnostic,
                                  std::size_t max_walls = 64);

/// Union of closed faces (2-cells and isolated edges) containing a wall edge.
Subcomplex wall_carrier(const CellComplex& x, const Wall& w);

struct HalfspaceResult {
    bool ok = false;          // exactly two complement components
    int ncomponents = 0;
    std::vector<Subcomplex> components;  // all components, largest data for diagnostics
    Subcomplex left, right;   // component + carrier, when ok
    bool invariants_ok = false;  // union is X, intersection is the carrier
};

/// Splits the complex along a wall: flood-fills the complement of the carrier
/// (all vertices, non-wall edges, non-carrier 2-cells) and attaches the
/// carrier to each side.  A component count other than two is reported, not
/// fatal.
HalfspaceResult halfspaces(const CellComplex& x, const Wall& w);

/// The two sides of a carrier cut along one opposite pair e, e': removes
/// 2-cells whose boundary uses both, and their edges f except when some
/// piece P on that boundary contains f together with e or e'.  The remainder
/// is flood-filled; components plus removed cells partition the carrier.
struct WallSplitResult {
    std::vector<Subcomplex> components;
    Subcomplex removed;
};

WallSplitResult wall_split(const CellComplex& x, const Wall& w, const Subcomplex& carrier,
                           const std::string& e, const std::string& eprime,
                           ReversalPolicy policy = ReversalPolicy::Agnostic);

/// A straight run of 2-cells linked by consecutive edges, each consecutive
/// link pair opposite in the cell between them, with no two consecutive
/// cells sharing an attaching cycle.
struct WallSegment {
    std::vector<std::string> faces;  // R_1 .. R_n, n >= 1
    std::vector<std::string> links;  // e_1 .. e_{n-1}; e_i shared by R_i, R_{i+1}
};

struct SegmentCheck {
    bool ok = false;
    std::string reason;  // empty when ok
};

/// Structural check plus geodesy: the face interval between the endpoints
/// must be exactly the segment's faces and consecutive cells the only
/// adjacent pairs.
SegmentCheck verify_wall_segment(const CellComplex& x, const FaceGraph& g,
                                 const WallSegment& seg,
                                 ReversalPolicy policy = ReversalPolicy::Agnostic);

/// Two segments sharing their end cell B, forming a bend that is still
/// geodesic: the arms meet only in B and the concatenated face sequence
/// realizes the face distance between the far endpoints.
SegmentCheck verify_bent_segment(const CellComplex& x, const FaceGraph& g,
                                 const WallSegment& arm_a, const WallSegment& arm_b,
                                 ReversalPolicy policy = ReversalPolicy::Agnostic);

/// Infers the link edges for a face sequence, trying shared edges between
/// consecutive cells; returns the first assignment passing verification.
std::optional<WallSegment> segment_from_faces(const CellComplex& x, const FaceGraph& g,
                                              const std::vector<std::string>& faces,
                                              ReversalPolicy policy = ReversalPolicy::Agnostic);

}  // namespace scw
