#include "fgl/lie.hpp"

#include <sstream>
#include <stdexcept>

namespace fgl {

LieAlgebra::LieAlgebra(std::size_t m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {
    if (m_ == 0) throw std::invalid_argument("lie algebra: dimension must be positive");
    if (c_.size() != m_ * m_ * m_)
        throw std::invalid_argument("lie algebra: structure constant table has wrong size");

    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < m_; ++j)
            for (std::size_t k = 0; k < m_; ++k)
                if (bracket_coeff(i, j, k) != -bracket_coeff(j, i, k))
                    throw std::invalid_argument("lie algebra: bracket is not antisymmetric");

    // Jacobi: [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < m_; ++j)
            for (std::size_t k = 0; k < m_; ++k)
                for (std::size_t r = 0; r < m_; ++r) {
                    Rational total = 0;
                    for (std::size_t l = 0; l < m_; ++l) {
                        total += bracket_coeff(i, j, l) * bracket_coeff(l, k, r);
                        total += bracket_coeff(j, k, l) * bracket_coeff(l, i, r);
                        total += bracket_coeff(k, i, l) * bracket_coeff(l, j, r);
                    }
                    if (total != 0)
                        throw std::invalid_argument("lie algebra: Jacobi identity fails");
                }
}

LieAlgebra LieAlgebra::abelian(std::size_t m) {
    return LieAlgebra(m, std::vector<Rational>(m * m * m, Rational(0)));
}

bool LieAlgebra::is_abelian() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

LieAlgebra lie_from_fgl(const FormalGroupLaw& g) {
    const std::size_t m = g.dim();
    std::vector<Rational> c(m * m * m, Rational(0));
    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t j = 0; j < m; ++j)
                c[(l * m + k) * m + j] = g.gamma(j, l, k) - g.gamma(j, k, l);
    return LieAlgebra(m, std::move(c));
}

std::string lie_to_text(const LieAlgebra& L) {
    std::ostringstream out;
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            bool nonzero = false;
            for (std::size_t k = 0; k < L.dim(); ++k)
                if (L.bracket_coeff(i, j, k) != 0) nonzero = true;
            if (!nonzero) continue;
            out << "[e" << (i + 1) << ",e" << (j + 1) << "] =";
            bool first = true;
            for (std::size_t k = 0; k < L.dim(); ++k) {
                const Rational& c = L.bracket_coeff(i, j, k);
                if (c == 0) continue;
                out << (first ? " " : " + ") << rational_to_string(c) << "*e" << (k + 1);
                first = false;
            }
            out << "\n";
        }
    return out.str();
}

} // namespace fgl
