// Parallel drivers for the per-face scan kernels.
//
// Each driver builds the shared read-only tables once (site scanner, face
// graph), runs the per-index body through par_for into a private slot per
// index, and concatenates slots in index order.  That makes the output a
// permutation-free match for the serial reference implementations in
// pieces.cpp / metrics.cpp / nerve.cpp, which tests assert verbatim.

#include "scw/parallel.hpp"

#include <cstddef>

#include "piece_scan.hpp"
#include "scw/nerve.hpp"

namespace scw {

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

std::vector<CnViolation> check_cn_exec(const CellComplex& x, int n, Exec ex,
                                       ReversalPolicy policy) {
    const detail::PieceScanner sc = detail::PieceScanner::build(x, policy);
    const auto& faces = x.faces2();
    std::vector<std::vector<CnViolation>> slots(faces.size());
    par_for(ex, faces.size(), [&](std::size_t i) {
        const PieceLength pl = sc.plength_cycle(faces[i].boundary);
        if (!pl.unbounded() && pl.value() < n) slots[i].push_back(CnViolation{faces[i].id, pl});
    });
    std::vector<CnViolation> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

std::vector<StrictCnViolation> check_strict_cn_exec(const CellComplex& x, int n, Exec ex,
                                                    ReversalPolicy policy) {
    const detail::PieceScanner sc = detail::PieceScanner::build(x, policy);
    const auto& faces = x.faces2();
    std::vector<std::vector<StrictCnViolation>> slots(faces.size());
    par_for(ex, faces.size(), [&](std::size_t i) {
        const Face2& f = faces[i];
        const int m = static_cast<int>(f.boundary.size());
        auto mod = [m](int v) { return ((v % m) + m) % m; };
        for (int dir : {+1, -1}) {
            for (int start = 0; start < m; ++start) {
                std::vector<Step> wrap;
                wrap.reserve(static_cast<std::size_t>(m) + 1);
                for (int t = 0; t <= m; ++t)
                    wrap.push_back(dir > 0 ? f.boundary[mod(start + t)]
                                           : reversed(f.boundary[mod(start - 1 - t)]));
                const PieceLength pl = sc.plength_path(wrap);
                if (pl <= PieceLength::of(n))
                    slots[i].push_back(StrictCnViolation{f.id, start, dir, pl});
            }
        }
    });
    std::vector<StrictCnViolation> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

std::vector<std::vector<int>> all_pairs_face_distance(const FaceGraph& g, Exec ex) {
    std::vector<std::vector<int>> rows(g.ids.size());
    par_for(ex, g.ids.size(), [&](std::size_t i) {
        rows[i] = bfs_from(g, {static_cast<int>(i)});
    });
    return rows;
}

std::vector<bool> links_six_large_exec(const FaceGraph& g, Exec ex, int max_degree) {
    // vector<bool> is not safe for concurrent element writes; stage in char.
    std::vector<char> verdict(g.ids.size(), 0);
    par_for(ex, g.ids.size(), [&](std::size_t i) {
        verdict[i] = link_six_large_node(g, static_cast<int>(i), max_degree).six_large ? 1 : 0;
    });
    return std::vector<bool>(verdict.begin(), verdict.end());
}

}  // namespace scw
