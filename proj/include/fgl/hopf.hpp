#pragma once

#include "fgl/dual_u.hpp"
#include "fgl/formal_group.hpp"
#include "fgl/lie.hpp"
#include "fgl/series.hpp"

#include <optional>

namespace fgl {

/// coproduct on functions: f -> f(G(X, Y)), a series in 2m variables
TruncatedSeries og_comultiply(const FormalGroupLaw& g, const TruncatedSeries& f);

/// antipode on functions: f -> f(s(X))
TruncatedSeries og_antipode_apply(const FormalGroupLaw& g, const TruncatedSeries& f);

/**
 * The filtered morphism from functions on the group to the graded dual of the
 * enveloping algebra.  The coefficient of d^{j}t is the value of the ordered
 * mixed partial matching e_1^{j_1}..e_m^{j_m} on the |j|-fold iterated
 * coproduct of f, at 0; equivalently, the multilinear coefficient of the
 * iterated-coproduct expansion picked out by the nondecreasing word of j.
 *
 * Coefficients are exact for every |j| <= trunc: the expansion only ever
 * drops monomials of total degree above trunc, and those cannot meet a
 * multilinear extraction of degree <= trunc.
 */
DualUElement tals(const FormalGroupLaw& g, const TruncatedSeries& f);

/**
 * Inverse of tals on the capped representations, by triangular solve: the
 * leading coefficient of tals(t^j) is j! on d^j t, so each degree of the
 * preimage is recovered by dividing the residual by j!.  Exact round trip.
 */
TruncatedSeries tals_inverse(const FormalGroupLaw& g, const DualUElement& u);

struct ModifiedRingReport {
    long prime = 0;
    int checked_degree = 0; // membership is decided on stored terms up to this degree only
    bool member = true;
    // first failing index in graded-lex order, with how far its valuation falls short
    std::optional<MultiIndex> witness;
    int deficit = 0;
};

/**
 * Membership test for the coefficient condition j! * b_j integral at p,
 * checked on every stored term: v_p(b_j) + v_p(j!) >= 0.
 */
ModifiedRingReport modified_ring_check(const TruncatedSeries& f, long p);

/**
 * The coproduct dual to the enveloping-algebra product, computed on pairs
 * with |left| + |right| <= total_cap: the (j, k) entry is the value of `a` on
 * the straightened product e^j e^k.  For an abelian Lie algebra this is the
 * Pascal split ustar_comultiply; in general the straightening corrections
 * are exactly what make the coproduct compatible with tals.
 */
DualPairMap ustar_comultiply_dual(const LieAlgebra& L, const DualUElement& a, int total_cap);

} // namespace fgl
