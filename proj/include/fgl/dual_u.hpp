#pragma once

#include "fgl/multi_index.hpp"
#include "fgl/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace fgl {

/**
 * Element of the graded dual of an enveloping algebra, written on the basis
 * d^{j}t dual to the ordered monomials e_1^{j_1}...e_m^{j_m}.  Support is
 * capped at total degree `cap`; products drop anything past the cap, which is
 * consistent with the filtration by total index degree.
 */
class DualUElement {
public:
    DualUElement(std::size_t dim, int cap);

    static DualUElement unit(std::size_t dim, int cap); // coefficient 1 on the empty index
    static DualUElement basis(std::size_t dim, int cap, const MultiIndex& j);

    std::size_t dim() const { return dim_; }
    int cap() const { return cap_; }
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }

    Rational coeff(const MultiIndex& j) const;
    void add_term(const MultiIndex& j, const Rational& c);

    DualUElement operator+(const DualUElement& o) const;
    DualUElement operator-(const DualUElement& o) const;
    DualUElement operator*(const Rational& c) const;
    bool operator==(const DualUElement& o) const;
    bool operator!=(const DualUElement& o) const { return !(*this == o); }
    bool is_zero() const { return terms_.empty(); }

private:
    std::size_t dim_;
    int cap_;
    std::map<MultiIndex, Rational> terms_;
};

/// smallest total index degree with a nonzero coefficient; cap+1 when zero
int dual_filtration_degree(const DualUElement& a);

/// d^r t * d^s t = prod_i C(r_i + s_i, r_i) d^{r+s} t, extended bilinearly
DualUElement ustar_mul(const DualUElement& a, const DualUElement& b);

/// tensor-square support: (left index, right index) -> coefficient
using DualPairMap = std::map<std::pair<MultiIndex, MultiIndex>, Rational>;

/**
 * Pascal split d^r t -> sum over l + k = r of d^l t (x) d^k t, extended
 * linearly.  This is the coproduct of the divided-power Hopf algebra; it is
 * dual to the enveloping product exactly when the Lie algebra is abelian
 * (see ustar_comultiply_dual for the general case).
 */
DualPairMap ustar_comultiply(const DualUElement& a);

/// factors d^j ti in graded-lex order, joined like series text
std::string to_text(const DualUElement& a);

} // namespace fgl
