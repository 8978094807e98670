// Execution policy for the scan kernels.
//
// The per-face scans (C(n)/strict C(n) sweeps, all-pairs face distances,
// link checks) are embarrassingly parallel: iterations write disjoint slots
// and results are merged afterwards, so serial and parallel runs produce
// identical output.  The serial path is the reference; the parallel path
// uses OpenMP when the toolchain provides it and silently degrades to
// serial otherwise.  scw_bench times one against the other.

#pragma once

#include <cstddef>
#include <vector>

#include "scw/complex.hpp"
#include "scw/metrics.hpp"
#include "scw/pieces.hpp"

namespace scw {

enum class Exec { Serial, Parallel };

/// Runs body(i) for i in [0, n).  Iterations must be independent.
template <typename Body>
void par_for(Exec ex, std::size_t n, Body&& body) {
    if (ex == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) body(i);
}

bool openmp_enabled();

/// Policy-parallel variants of the face scans.  Results are identical to the
/// serial library functions; the serial library path stays the reference.
std::vector<CnViolation> check_cn_exec(const CellComplex& x, int n, Exec ex,
                                       ReversalPolicy policy = ReversalPolicy::Agnostic);
std::vector<StrictCnViolation> check_strict_cn_exec(const CellComplex& x, int n, Exec ex,
                                                    ReversalPolicy policy = ReversalPolicy::Agnostic);

/// All-pairs face distances; row i = BFS from node i (-1 unreachable).
std::vector<std::vector<int>> all_pairs_face_distance(const FaceGraph& g, Exec ex);

/// Per-node 6-largeness verdicts for every link of g (true = no induced
/// C4/C5 through that node's link).
std::vector<bool> links_six_large_exec(const FaceGraph& g, Exec ex, int max_degree = 64);

}  // namespace scw
