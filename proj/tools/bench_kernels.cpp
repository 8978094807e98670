// Kernel benchmark: serial reference vs OpenMP execution.
//
// Runs the four policy-parallel scans (C(n) sweep, strict C(n) sweep,
// all-pairs face distances, per-node link checks) on generated fixtures and
// prints wall-clock times for both execution policies plus an equality check
// of the outputs.  With --heavy the fixtures grow one size step.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "scw/generators.hpp"
#include "scw/metrics.hpp"
#include "scw/nerve.hpp"
#include "scw/parallel.hpp"

namespace {

double ms_of(const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Fixture {
    std::string name;
    scw::CellComplex x;
};

void bench(const Fixture& fx) {
    using scw::Exec;
    const scw::FaceGraph g = scw::build_face_graph(fx.x);
    std::printf("%-14s %5zu faces, %5zu graph nodes\n", fx.name.c_str(), fx.x.faces2().size(),
                g.ids.size());

    auto row = [&](const char* kernel, const std::function<bool()>& equal,
                   const std::function<void()>& serial, const std::function<void()>& parallel) {
        const double ts = ms_of(serial);
        const double tp = ms_of(parallel);
        std::printf("  %-12s serial %9.2f ms   parallel %9.2f ms   x%.2f   %s\n", kernel, ts, tp,
                    tp > 0 ? ts / tp : 0.0, equal() ? "outputs equal" : "OUTPUTS DIFFER");
    };

    {
        std::vector<scw::CnViolation> a, b;
        row(
            "cn", [&] { return a.size() == b.size(); },
            [&] { a = scw::check_cn_exec(fx.x, 6, Exec::Serial); },
            [&] { b = scw::check_cn_exec(fx.x, 6, Exec::Parallel); });
    }
    {
        std::vector<scw::StrictCnViolation> a, b;
        row(
            "strict-cn", [&] { return a.size() == b.size(); },
            [&] { a = scw::check_strict_cn_exec(fx.x, 6, Exec::Serial); },
            [&] { b = scw::check_strict_cn_exec(fx.x, 6, Exec::Parallel); });
    }
    {
        std::vector<std::vector<int>> a, b;
        row(
            "all-pairs", [&] { return a == b; },
            [&] { a = scw::all_pairs_face_distance(g, Exec::Serial); },
            [&] { b = scw::all_pairs_face_distance(g, Exec::Parallel); });
    }
    {
        std::vector<bool> a, b;
        row(
            "links", [&] { return a == b; },
            [&] { a = scw::links_six_large_exec(g, Exec::Serial); },
            [&] { b = scw::links_six_large_exec(g, Exec::Parallel); });
    }
}

}  // namespace

int main(int argc, char** argv) {
    bool heavy = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--heavy") == 0) heavy = true;

    std::printf("OpenMP: %s\n\n", scw::openmp_enabled() ? "enabled" : "not available (serial fallback)");

    std::vector<Fixture> fixtures;
    fixtures.push_back({"hex r=3", scw::gen_hex(heavy ? 4 : 3).complex});
    fixtures.push_back({"hex r=2 sub=2", scw::gen_hex(2, heavy ? 3 : 2).complex});
    fixtures.push_back({"blowup m=2", scw::gen_blowup(heavy ? 3 : 2).complex});
    fixtures.push_back({"band 8x2", scw::gen_band(heavy ? 12 : 8, 2).complex});

    for (const Fixture& fx : fixtures) {
        bench(fx);
        std::printf("\n");
    }
    return 0;
}
