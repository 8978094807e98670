// Generators for the example families used throughout the test-suite and CLI.
//
// Each generator returns the complex together with named marks (interesting
// subcomplexes and cells: designated 2-cells, ring subcomplexes, central
// portions) so callers need not re-derive them from ids.  All generators are
// deterministic: same parameters, same bytes.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "scw/complex.hpp"
#include "scw/diagrams.hpp"

namespace scw {

/// Side-data from hex-family generators: integer plane positions per vertex,
/// scaled so all coordinates are exact.  Empty for other generators.
struct HexGeometry {
    std::map<std::string, std::pair<long long, long long>> vertex_uv;
};

struct GeneratedComplex {
    CellComplex complex;
    // Named subcomplexes ("ring", "central", "Y1", ...).
    std::map<std::string, Subcomplex> marks;
    // Named individual cells ("R", "Rprime", ...).
    std::map<std::string, std::string> cells;
    HexGeometry geometry;
};

/// Arbitrary finite set of hexagonal-tiling cells (axial coordinates), glued
/// edge-to-edge exactly as in the tiling; side edges optionally subdivided
/// into `subdiv` segments.  The workhorse behind gen_hex and gen_band.
GeneratedComplex gen_hex_patch(const std::vector<std::pair<int, int>>& coords,
                               int subdiv = 1);

/// Hexagonal-tiling ball of radius r around the origin cell.
GeneratedComplex gen_hex(int r, int subdiv = 1);

/// Rectangular l x w strip of the hexagonal tiling.
GeneratedComplex gen_band(int l, int w, int subdiv = 1);

/// Cycle of 2n vertices (n >= 2) with a doubled edge (bigon 2-cell) over
/// every one of the 2n sides, plus the 2n-gon cell "R" itself.  Marks
/// "Y1"/"Y2" split the petals into the first and last n.
GeneratedComplex gen_petal(int n);

/// Octagon with four rectangle+pentagon blocks forming a thickened square
/// ring around it: the ring of eight 4-plus-sided cells is marked "ring" and
/// is d_f-isometrically embedded and d_f-convex.
GeneratedComplex gen_thick_square();

/// The doubled-ring complex over the two-generator Cayley graph of Z x Z/2,
/// truncated at radius m >= 1: vertex cells (octagons), edge cells, and one
/// independently attached copy block per ring relation.  Cells "R"/"Rprime"
/// mark the antipodal pair of central vertex cells, mark "central" the
/// portion unaffected by truncation.
GeneratedComplex gen_blowup(int m);

/// Disc diagram carried by a honeycomb ball/patch: the generated complex
/// with its planar rotation (exact integer angles) and boundary walk, mapped
/// identically into itself (or into a complex that contains it).
DiscDiagram make_hex_diagram(const GeneratedComplex& gc);

}  // namespace scw
