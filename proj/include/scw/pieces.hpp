// Pieces and the piece-length metric on paths.
//
// A piece is a nontrivial path that admits two essentially different
// factorizations through 2-cell boundaries: two ways of reading the path
// around attaching cycles that are not identified by any boundary
// isomorphism commuting with both readings.  The piece length of a path is
// the least number of pieces it can be cut into; a path containing an edge
// that lies on no piece at all has unbounded piece length, which compares
// greater than every integer.
//
// Condition C(n) for a complex asks that no attaching cycle decompose into
// fewer than n pieces; the strict variant additionally bounds cyclic
// overruns (paths one step longer than the cycle, read around it).

#pragma once

#include <optional>
#include <vector>

#include "scw/complex.hpp"

namespace scw {

/// One way of reading a path around a 2-cell boundary: start position in the
/// attaching cycle and reading direction (+1 with the cycle, -1 against it).
struct Factorization {
    std::string face;
    int start = 0;
    int dir = +1;

    friend bool operator==(const Factorization& a, const Factorization& b) {
        return a.start == b.start && a.dir == b.dir && a.face == b.face;
    }
    friend bool operator<(const Factorization& a, const Factorization& b) {
        if (a.face != b.face) return a.face < b.face;
        if (a.start != b.start) return a.start < b.start;
        return a.dir > b.dir;
    }
};

/// Evidence that a path is a piece: two factorizations with no commuting
/// boundary isomorphism between them.
struct PieceCertificate {
    Factorization first;
    Factorization second;
};

/// Piece length value: a non-negative integer or unbounded.  Unbounded
/// compares strictly greater than every integer and absorbs under +.
class PieceLength {
  public:
    static PieceLength bot() { return PieceLength(); }
    static PieceLength of(std::int64_t v) {
        PieceLength p;
        p.unbounded_ = false;
        p.value_ = v;
        return p;
    }

    bool unbounded() const { return unbounded_; }
    std::int64_t value() const { return value_; }  // meaningful only when bounded

    friend PieceLength operator+(const PieceLength& a, const PieceLength& b) {
        if (a.unbounded_ || b.unbounded_) return bot();
        return of(a.value_ + b.value_);
    }
    friend bool operator==(const PieceLength& a, const PieceLength& b) {
        if (a.unbounded_ != b.unbounded_) return false;
        return a.unbounded_ || a.value_ == b.value_;
    }
    friend bool operator!=(const PieceLength& a, const PieceLength& b) { return !(a == b); }
    friend bool operator<(const PieceLength& a, const PieceLength& b) {
        if (a.unbounded_) return false;
        if (b.unbounded_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const PieceLength& a, const PieceLength& b) {
        return a < b || a == b;
    }
    friend bool operator>(const PieceLength& a, const PieceLength& b) { return b < a; }
    friend bool operator>=(const PieceLength& a, const PieceLength& b) { return b <= a; }

  private:
    bool unbounded_ = true;
    std::int64_t value_ = 0;
};

/// All ways of reading `steps` around 2-cell boundaries of x.
std::vector<Factorization> factorizations(const CellComplex& x,
                                          const std::vector<Step>& steps);

/// Decides whether the path is a piece; on success returns a witnessing pair
/// of factorizations.  Nontrivial only (trivial paths are never pieces).
std::optional<PieceCertificate> is_piece(const CellComplex& x,
                                         const std::vector<Step>& steps,
                                         ReversalPolicy policy = ReversalPolicy::Agnostic);

/// Least number of pieces `steps` decomposes into (0 for trivial paths).
PieceLength piece_length_path(const CellComplex& x, const std::vector<Step>& steps,
                              ReversalPolicy policy = ReversalPolicy::Agnostic);

/// Minimum of piece_length_path over all rotations of the cycle, in both
/// reading directions when the policy allows reversal.
PieceLength piece_length_cycle(const CellComplex& x, const std::vector<Step>& cycle,
                               ReversalPolicy policy = ReversalPolicy::Agnostic);

struct CnViolation {
    std::string face;
    PieceLength plength;  // finite and < n
};

/// Faces whose attaching cycle has finite piece length below n.
std::vector<CnViolation> check_cn(const CellComplex& x, int n,
                                  ReversalPolicy policy = ReversalPolicy::Agnostic);

struct StrictCnViolation {
    std::string face;
    int start = 0;
    int dir = +1;
    PieceLength plength;  // <= n
};

/// Strict variant: for every face, every cyclic read of length |boundary|+1
/// (each start, each direction) must have piece length > n.
std::vector<StrictCnViolation> check_strict_cn(const CellComplex& x, int n,
                                               ReversalPolicy policy = ReversalPolicy::Agnostic);

/// A hextuple of cut positions splitting an attaching cycle into six
/// nontrivial arcs, each of which can be read around some *other* 2-cell.
struct PetalDecomposition {
    std::string face;
    std::vector<int> cuts;  // six strictly increasing positions in [0, |boundary|)
};

std::vector<PetalDecomposition> petal_decompositions(const CellComplex& x,
                                                     const std::string& face_id);

/// Positions p < q in a face boundary such that both arcs between them
/// (inclusive of the endpoint edges) have piece length exceeding 3, with no
/// other occurrence of either edge strictly inside the arc.
struct OppositePair {
    int p = 0;
    int q = 0;
};

std::vector<OppositePair> opposite_pairs(const CellComplex& x, const std::string& face_id,
                                         ReversalPolicy policy = ReversalPolicy::Agnostic);

/// True when edges at positions p, q of the face boundary form an opposite pair.
bool positions_opposite(const CellComplex& x, const std::string& face_id, int p, int q,
                        ReversalPolicy policy = ReversalPolicy::Agnostic);

/// Diagnostic probe: subpaths of pieces that fail to be pieces themselves.
/// The decomposition search never assumes closure of pieces under subpaths;
/// this reports where that closure actually breaks on a given complex.
struct SubpathViolation {
    std::vector<Step> piece;
    int from = 0, len = 0;  // offending subpath piece[from .. from+len)
};

std::vector<SubpathViolation> piece_subpath_violations(const CellComplex& x,
                                                       ReversalPolicy policy = ReversalPolicy::Agnostic,
                                                       std::size_t max_reports = 16);

}  // namespace scw
