#pragma once

#include "fgl/lie.hpp"
#include "fgl/multi_index.hpp"

#include <map>
#include <vector>

namespace fgl {

/**
 * Element of the enveloping algebra on the ordered basis e_1^{j_1}..e_m^{j_m}
 * (exponent vector -> coefficient).  Arbitrary generator words are rewritten
 * onto this basis by bubbling out-of-order adjacent pairs with commutator
 * corrections; each rewrite either lowers the inversion count or shortens the
 * word, so the rewriting terminates.
 */
using UElement = std::map<MultiIndex, Rational>;

void u_add_term(UElement& u, const MultiIndex& j, const Rational& c);

/// rewrite a generator word (letters 0..m-1) onto the ordered basis
UElement straighten_word(const LieAlgebra& L, const std::vector<int>& word);

/// product of two ordered monomials
UElement u_product(const LieAlgebra& L, const MultiIndex& a, const MultiIndex& b);

UElement u_mul(const LieAlgebra& L, const UElement& a, const UElement& b);

/// coefficient of the empty monomial
Rational u_counit(const UElement& a, std::size_t dim);

} // namespace fgl
