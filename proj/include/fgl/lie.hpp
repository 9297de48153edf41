#pragma once

#include "fgl/formal_group.hpp"
#include "fgl/rational.hpp"

#include <string>
#include <vector>

namespace fgl {

/**
 * Finite-dimensional Lie algebra over Rational with basis e_1..e_m, stored as
 * structure constants: [e_i, e_j] = sum_k c(i, j, k) e_k.  Construction
 * verifies antisymmetry and the Jacobi identity exactly.
 */
class LieAlgebra {
public:
    LieAlgebra(std::size_t m, std::vector<Rational> c);

    static LieAlgebra abelian(std::size_t m);

    std::size_t dim() const { return m_; }

    const Rational& bracket_coeff(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * m_ + j) * m_ + k];
    }

    bool is_abelian() const;

private:
    std::size_t m_;
    std::vector<Rational> c_; // c[(i*m + j)*m + k]
};

/// bracket from the degree-2 mixed block: c(l, k, j) = gamma(j, l, k) - gamma(j, k, l)
LieAlgebra lie_from_fgl(const FormalGroupLaw& g);

/// one line per nonzero bracket [ei,ej] with i < j
std::string lie_to_text(const LieAlgebra& L);

} // namespace fgl
