#pragma once

#include "fgl/series.hpp"

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fgl {

/// toggle the OpenMP code paths at runtime (default: on when compiled with OpenMP)
void set_parallel(bool enabled);
bool parallel_enabled();

namespace kernels {

/**
 * Sparse Cauchy product of two term maps, truncated at total degree trunc.
 * The serial variant is the reference implementation; the parallel variant
 * splits the left factor across threads and merges per-thread partial maps in
 * thread order.  Coefficients are exact rationals, so the merged result is
 * identical to the serial one.
 */
TruncatedSeries::TermMap mul_terms_serial(const TruncatedSeries::TermMap& a,
                                          const TruncatedSeries::TermMap& b, int trunc);
TruncatedSeries::TermMap mul_terms_parallel(const TruncatedSeries::TermMap& a,
                                            const TruncatedSeries::TermMap& b, int trunc);
/// dispatches on parallel_enabled() and problem size
TruncatedSeries::TermMap mul_terms(const TruncatedSeries::TermMap& a,
                                   const TruncatedSeries::TermMap& b, int trunc);

/**
 * Evaluate fn(i) for i in [0, count) and return results indexed by i.
 * Results are merged by index, so the output is independent of scheduling.
 */
template <class T, class F>
std::vector<T> indexed_batch(std::size_t count, F&& fn) {
    std::vector<T> out(count);
#ifdef _OPENMP
    if (parallel_enabled() && count > 1) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        return out;
    }
#endif
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
}

} // namespace kernels
} // namespace fgl
