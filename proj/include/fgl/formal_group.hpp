#pragma once

#include "fgl/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fgl {

enum class Builtin { Additive, Multiplicative, Heisenberg, AxPlusB };

std::string builtin_name(Builtin b);
std::optional<Builtin> builtin_from_name(const std::string& name);

/**
 * An m-dimensional formal group law candidate: m series G^(j)(X, Y) in 2m
 * variables (X = vars 0..m-1, Y = vars m..2m-1), truncated at a common total
 * degree.  Construction validates only the structural skeleton (arity, zero
 * constant term); the group axioms are checked separately so that defective
 * candidates can be loaded and reported on.
 *
 * gamma(j, l, k) is the coefficient of X_l Y_k in G^(j); the degree-2 mixed
 * block of a genuine law, and the source of the Lie bracket.
 */
class FormalGroupLaw {
public:
    explicit FormalGroupLaw(std::vector<TruncatedSeries> components);

    std::size_t dim() const { return m_; }
    int trunc() const { return trunc_; }
    const TruncatedSeries& component(std::size_t j) const { return comps_[j]; }
    const std::vector<TruncatedSeries>& components() const { return comps_; }

    const Rational& gamma(std::size_t j, std::size_t l, std::size_t k) const {
        return gamma_[(j * m_ + l) * m_ + k];
    }

private:
    std::size_t m_;
    int trunc_;
    std::vector<TruncatedSeries> comps_;
    std::vector<Rational> gamma_;
};

/// the stock laws; dim_for_additive is only consulted for the additive family
FormalGroupLaw builtin_law(Builtin b, int trunc, std::size_t dim_for_additive = 1);

struct AxiomViolation {
    std::string axiom; // "unit" or "associativity"
    std::size_t component;
    MultiIndex monomial;
    Rational coefficient;
};

struct AxiomReport {
    bool unit_ok = true;
    bool assoc_ok = true;
    std::optional<AxiomViolation> first_violation; // graded-lex-first in the first failing component
    bool ok() const { return unit_ok && assoc_ok; }
};

/**
 * Check G(X, 0) = X, G(0, Y) = Y and G(G(X, Y), Z) = G(X, G(Y, Z)) modulo the
 * truncation filtration.  The associativity residual is formed in 3m
 * variables (X block, Y block, Z block) at the law's own truncation degree.
 */
AxiomReport check_axioms(const FormalGroupLaw& g);

/// G(X, Y) == G(Y, X) modulo the truncation filtration
bool is_commutative(const FormalGroupLaw& g);

/**
 * The unique m-tuple s(X) with G(X, s(X)) = 0 modulo the truncation
 * filtration, found degree by degree: s starts at -X and each pass cancels
 * the lowest surviving degree of the residual, which the next correction
 * cannot disturb.
 */
std::vector<TruncatedSeries> antipode(const FormalGroupLaw& g);

/// conjugate by the scaling X -> p^h X: coefficients of degree d scale by p^(h(d-1))
FormalGroupLaw rescale(const FormalGroupLaw& g, long p, int h);

/**
 * Does alpha (an m-tuple of series in m variables, zero constant term) carry
 * `from` to `to`, i.e. alpha(from(X, Y)) = to(alpha(X), alpha(Y)) modulo the
 * truncation filtration?
 */
bool is_homomorphism(const std::vector<TruncatedSeries>& alpha, const FormalGroupLaw& from,
                     const FormalGroupLaw& to);

/// JSON record with "dim", "trunc", "components" (exponent vector + "num/den" pairs)
std::string fgl_to_json(const FormalGroupLaw& g);
FormalGroupLaw fgl_from_json(const std::string& text);
FormalGroupLaw load_fgl(const std::string& path);
void save_fgl(const FormalGroupLaw& g, const std::string& path);

} // namespace fgl
