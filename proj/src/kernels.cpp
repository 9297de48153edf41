#include "fgl/kernels.hpp"

#include <atomic>

namespace fgl {

namespace {
std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};

void erase_zero_terms(TruncatedSeries::TermMap& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0)
            it = m.erase(it);
        else
            ++it;
    }
}
} // namespace

void set_parallel(bool enabled) { g_parallel.store(enabled); }
bool parallel_enabled() { return g_parallel.load(); }

namespace kernels {

TruncatedSeries::TermMap mul_terms_serial(const TruncatedSeries::TermMap& a,
                                          const TruncatedSeries::TermMap& b, int trunc) {
    TruncatedSeries::TermMap out;
    for (const auto& [ma, ca] : a) {
        const int da = ma.total_degree();
        if (da > trunc) continue;
        for (const auto& [mb, cb] : b) {
            // graded-lex iteration is nondecreasing in degree, so stop early
            if (da + mb.total_degree() > trunc) break;
            out[ma + mb] += ca * cb;
        }
    }
    erase_zero_terms(out);
    return out;
}

TruncatedSeries::TermMap mul_terms_parallel(const TruncatedSeries::TermMap& a,
                                            const TruncatedSeries::TermMap& b, int trunc) {
#ifndef _OPENMP
    return mul_terms_serial(a, b, trunc);
#else
    if (a.size() < 2 || b.empty()) return mul_terms_serial(a, b, trunc);

    std::vector<const std::pair<const MultiIndex, Rational>*> av;
    av.reserve(a.size());
    for (const auto& kv : a) av.push_back(&kv);

    const int nthreads = omp_get_max_threads();
    std::vector<TruncatedSeries::TermMap> partial(static_cast<std::size_t>(nthreads));

#pragma omp parallel num_threads(nthreads)
    {
        TruncatedSeries::TermMap& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (long long idx = 0; idx < static_cast<long long>(av.size()); ++idx) {
            const auto& [ma, ca] = *av[static_cast<std::size_t>(idx)];
            const int da = ma.total_degree();
            if (da > trunc) continue;
            for (const auto& [mb, cb] : b) {
                if (da + mb.total_degree() > trunc) break;
                local[ma + mb] += ca * cb;
            }
        }
    }

    // merge in thread order; exact addition makes the result independent of the split
    TruncatedSeries::TermMap out = std::move(partial[0]);
    for (int t = 1; t < nthreads; ++t)
        for (auto& [m, c] : partial[static_cast<std::size_t>(t)]) out[m] += c;
    erase_zero_terms(out);
    return out;
#endif
}

TruncatedSeries::TermMap mul_terms(const TruncatedSeries::TermMap& a,
                                   const TruncatedSeries::TermMap& b, int trunc) {
    // parallel pays off only on reasonably sized products
    if (parallel_enabled() && a.size() * b.size() >= 2048)
        return mul_terms_parallel(a, b, trunc);
    return mul_terms_serial(a, b, trunc);
}

} // namespace kernels
} // namespace fgl
