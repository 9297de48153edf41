#pragma once

#include "fgl/rational.hpp"

#include <cstddef>
#include <vector>

namespace fgl {

/// dense rational matrix, row-major
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/**
 * Exact rank by fraction-free (Bareiss) elimination: denominators are cleared
 * row-wise, then all updates stay in integers with exact division by the
 * previous pivot.  The parallel variant distributes row updates; every
 * intermediate value is identical to the serial computation.
 */
std::size_t rank_serial(RationalMatrix m);
std::size_t rank_parallel(RationalMatrix m);
std::size_t rank(const RationalMatrix& m); // dispatch

} // namespace fgl
