// Internal reading-head machinery shared by pieces.cpp and the parallel
// kernels.  Not installed; include only from src/.
//
// A "site" is one way of reading around a 2-cell boundary: a face, a start
// offset, and a direction.  Every factorization of every path is the
// restriction of exactly one site's infinite cyclic reading, so matching
// sites against a path once gives the factorization sets of all of its
// subpaths at the same time.  Sites whose full cyclic readings coincide are
// related by a boundary isomorphism commuting with any path they both cover;
// grouping sites into such classes turns "has two essentially different
// factorizations" into "covered by two distinct classes".

#pragma once

#include <map>
#include <vector>

#include "scw/complex.hpp"
#include "scw/pieces.hpp"

namespace scw::detail {

struct PieceScanner {
    const CellComplex* x = nullptr;
    ReversalPolicy policy = ReversalPolicy::Agnostic;

    struct Site {
        int face = 0;
        int start = 0;
        int dir = +1;
    };
    std::vector<Site> sites;     // per face: dir +1 starts 0..M-1, then dir -1
    std::vector<int> next_site;  // site whose reading is this one advanced by one
    std::vector<int> head_edge;  // edge index read at offset 0 (>= 0 always)
    std::vector<int> head_dir;
    std::vector<int> site_class;  // commuting-iso class; equal class == identified readings
    int nclasses = 0;

    static PieceScanner build(const CellComplex& x, ReversalPolicy policy);

    Factorization to_factorization(int site) const {
        const Site& s = sites[site];
        return Factorization{x->faces2()[s.face].id, s.start, s.dir};
    }

    /// Per-subpath piece table of p: piece(s, k) says p[s..s+k) is covered by
    /// two inequivalent readings.
    struct PathTable {
        int len = 0;
        std::vector<std::vector<char>> piece;  // piece[s][k], k in [0, len-s]
        bool is_piece(int s, int k) const { return piece[s][k] != 0; }
    };
    PathTable analyze(const std::vector<Step>& p) const;

    PieceLength plength_path(const std::vector<Step>& p) const;
    PieceLength plength_cycle(const std::vector<Step>& cycle) const;

    /// plengths of all prefixes (indexed by prefix length 0..L).
    std::vector<PieceLength> prefix_plengths(const std::vector<Step>& p) const;
    /// plengths of all suffixes (indexed by start position 0..L).
    std::vector<PieceLength> suffix_plengths(const std::vector<Step>& p) const;

    /// Sites whose reading covers all of p, in site order.
    std::vector<int> full_match_sites(const std::vector<Step>& p) const;

    /// Match length of p starting from `site`'s reading head.
    int match_length(int site, const std::vector<Step>& p, int from = 0) const;

    /// Whether boundary positions p, q of the face are opposite: both
    /// inclusive arcs between them avoid further occurrences of either edge
    /// and have piece length above three in both reading directions.
    bool positions_opposite(int face_index, int p, int q) const;
};

}  // namespace scw::detail
