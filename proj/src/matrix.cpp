#include "fgl/matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fgl/kernels.hpp"

namespace fgl {

namespace {

/// clear denominators row by row (row scaling leaves the rank unchanged)
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            a[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    return a;
}

void eliminate_row(std::vector<Integer>& row, const std::vector<Integer>& pivot_row,
                   std::size_t col, std::size_t cols, const Integer& pivot,
                   const Integer& prev) {
    const Integer factor = row[col];
    for (std::size_t j = col + 1; j < cols; ++j) {
        Integer t = pivot * row[j] - factor * pivot_row[j];
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
    }
    row[col] = 0;
}

std::size_t rank_impl(const RationalMatrix& m, bool parallel) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto a = integer_rows(m);
    const std::size_t rows = m.rows(), cols = m.cols();

    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        const Integer pivot = a[r][col];

#ifdef _OPENMP
        if (parallel) {
#pragma omp parallel for schedule(static)
            for (long long i = static_cast<long long>(r) + 1; i < static_cast<long long>(rows);
                 ++i)
                eliminate_row(a[static_cast<std::size_t>(i)], a[r], col, cols, pivot, prev);
        } else
#endif
        {
            (void)parallel;
            for (std::size_t i = r + 1; i < rows; ++i)
                eliminate_row(a[i], a[r], col, cols, pivot, prev);
        }

        prev = pivot;
        ++r;
    }
    return r;
}

} // namespace

std::size_t rank_serial(RationalMatrix m) { return rank_impl(m, false); }
std::size_t rank_parallel(RationalMatrix m) { return rank_impl(m, true); }

std::size_t rank(const RationalMatrix& m) {
    return rank_impl(m, parallel_enabled() && m.rows() >= 32);
}

} // namespace fgl
