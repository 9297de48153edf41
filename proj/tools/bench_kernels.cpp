// Timing comparison between the serial reference kernels and the OpenMP
// variants, with an exact-equality check on every result.  Not a ctest entry;
// run by hand to gauge speedups on the host machine.
#include "fgl/kernels.hpp"
#include "fgl/matrix.hpp"
#include "fgl/multi_index.hpp"
#include "fgl/rng.hpp"
#include "fgl/series.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace fgl;

namespace {

double seconds(const std::chrono::steady_clock::time_point a,
               const std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

TruncatedSeries::TermMap dense_terms(std::size_t m, int trunc, Rng& rng) {
    TruncatedSeries::TermMap out;
    for (const MultiIndex& j : indices_up_to_degree(m, trunc)) {
        const long num = static_cast<long>(rng.range(-9, 9));
        if (num == 0) continue;
        out.emplace(j, ratio(num, static_cast<long>(rng.range(1, 7))));
    }
    return out;
}

RationalMatrix random_matrix(std::size_t n, Rng& rng) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = ratio(static_cast<long>(rng.range(-20, 20)),
                               static_cast<long>(rng.range(1, 9)));
    return m;
}

} // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    Rng rng(2026);

    std::printf("%-34s %10s %10s %8s\n", "workload", "serial", "parallel", "speedup");

    const struct {
        std::size_t vars;
        int trunc;
    } mul_cases[] = {{2, 24}, {3, 14}, {4, 10}};
    for (const auto& mc : mul_cases) {
        const TruncatedSeries::TermMap a = dense_terms(mc.vars, mc.trunc, rng);
        const TruncatedSeries::TermMap b = dense_terms(mc.vars, mc.trunc, rng);
        double ts = 0, tp = 0;
        for (int r = 0; r < repeats; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            const auto ps = kernels::mul_terms_serial(a, b, mc.trunc);
            auto t1 = std::chrono::steady_clock::now();
            const auto pp = kernels::mul_terms_parallel(a, b, mc.trunc);
            auto t2 = std::chrono::steady_clock::now();
            if (ps != pp) {
                std::fprintf(stderr, "MISMATCH in series product\n");
                return 1;
            }
            ts += seconds(t0, t1);
            tp += seconds(t1, t2);
        }
        char label[64];
        std::snprintf(label, sizeof label, "series product m=%zu trunc=%d", mc.vars, mc.trunc);
        std::printf("%-34s %9.3fs %9.3fs %7.2fx\n", label, ts / repeats, tp / repeats,
                    tp > 0 ? ts / tp : 0.0);
    }

    for (const std::size_t n : {60UL, 120UL}) {
        const RationalMatrix m = random_matrix(n, rng);
        double ts = 0, tp = 0;
        std::size_t rs = 0, rp = 0;
        for (int r = 0; r < repeats; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            rs = rank_serial(m);
            auto t1 = std::chrono::steady_clock::now();
            rp = rank_parallel(m);
            auto t2 = std::chrono::steady_clock::now();
            if (rs != rp) {
                std::fprintf(stderr, "MISMATCH in matrix rank\n");
                return 1;
            }
            ts += seconds(t0, t1);
            tp += seconds(t1, t2);
        }
        char label[64];
        std::snprintf(label, sizeof label, "matrix rank n=%zu (rank %zu)", n, rs);
        std::printf("%-34s %9.3fs %9.3fs %7.2fx\n", label, ts / repeats, tp / repeats,
                    tp > 0 ? ts / tp : 0.0);
    }

    std::printf("all parallel results matched the serial reference\n");
    return 0;
}
