#pragma once

#include "fgl/dual_u.hpp"
#include "fgl/formal_group.hpp"
#include "fgl/hopf.hpp"
#include "fgl/lie.hpp"
#include "fgl/rng.hpp"
#include "fgl/series.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fgl {

/**
 * Degree-n cochain on the group side: a truncated series in n blocks of m
 * variables, block b holding the variables of tensor slot b+1.  n = 0 is a
 * plain constant (series in 0 variables).
 */
struct CobarCochain {
    std::size_t dim;      // m
    int degree;           // n >= 0
    TruncatedSeries body; // n*m variables

    CobarCochain(std::size_t m, int n, TruncatedSeries b);

    bool operator==(const CobarCochain& o) const {
        return dim == o.dim && degree == o.degree && body == o.body;
    }
};

/// strictly increasing tuple of 0-based generator indices
using WedgeTuple = std::vector<int>;

/// all strictly increasing k-tuples over 0..m-1, lexicographic order
std::vector<WedgeTuple> wedge_tuples(std::size_t m, int k);

/**
 * Alternating n-form on the Lie algebra basis: values on strictly increasing
 * index tuples, everything else determined by antisymmetry.  eval() accepts
 * an arbitrary tuple and applies the sort sign (zero on repeats).
 */
class CECochain {
public:
    CECochain(std::size_t dim, int degree);

    std::size_t dim() const { return dim_; }
    int degree() const { return degree_; }
    const std::map<WedgeTuple, Rational>& values() const { return values_; }

    Rational coeff(const WedgeTuple& t) const;
    void add_term(const WedgeTuple& t, const Rational& c); // t strictly increasing
    Rational eval(const WedgeTuple& t) const;              // any tuple, sign-adjusted

    bool is_zero() const { return values_.empty(); }
    CECochain operator+(const CECochain& o) const;
    CECochain operator-(const CECochain& o) const;
    bool operator==(const CECochain& o) const;
    bool operator!=(const CECochain& o) const { return !(*this == o); }

private:
    std::size_t dim_;
    int degree_;
    std::map<WedgeTuple, Rational> values_;
};

/// terms like series text with factors e{i+1}^ joined by " ∧ "; "0" when empty
std::string to_text(const CECochain& w);

/**
 * Finitely supported cochain on tensor powers of the enveloping algebra,
 * written against the ordered basis: a key lists one exponent vector per
 * tensor slot.  The homogeneous flavor carries one extra leading slot and is
 * stored on the slice where that slot is the empty index; evaluation off the
 * slice extends by the counit of the leading slot, which is exactly the
 * extension the slot-shift isomorphism produces.
 */
struct UCochain {
    std::size_t dim;
    int degree; // n: number of argument slots in the inhomogeneous picture
    bool homogeneous;
    std::map<std::vector<MultiIndex>, Rational> values;

    UCochain(std::size_t m, int n, bool hom) : dim(m), degree(n), homogeneous(hom) {}

    std::size_t slots() const { return static_cast<std::size_t>(degree) + (homogeneous ? 1 : 0); }
    Rational coeff(const std::vector<MultiIndex>& key) const;
    void add_term(const std::vector<MultiIndex>& key, const Rational& c);

    bool operator==(const UCochain& o) const {
        return dim == o.dim && degree == o.degree && homogeneous == o.homogeneous &&
               values == o.values;
    }
};

/// element of U (x) Lambda^n: (ordered exponent vector, increasing wedge tuple) -> coefficient
struct KoszulElement {
    std::size_t dim;
    int degree; // wedge degree n
    std::map<std::pair<MultiIndex, WedgeTuple>, Rational> terms;

    KoszulElement(std::size_t m, int n) : dim(m), degree(n) {}

    void add_term(const MultiIndex& u, const WedgeTuple& w, const Rational& c);
    bool operator==(const KoszulElement& o) const {
        return dim == o.dim && degree == o.degree && terms == o.terms;
    }
};

/// finitely supported functional on U (x) Lambda^n, same key shape as KoszulElement
struct KoszulDualCochain {
    std::size_t dim;
    int degree;
    std::map<std::pair<MultiIndex, WedgeTuple>, Rational> values;

    KoszulDualCochain(std::size_t m, int n) : dim(m), degree(n) {}

    Rational coeff(const MultiIndex& u, const WedgeTuple& w) const;
    void add_term(const MultiIndex& u, const WedgeTuple& w, const Rational& c);
    bool operator==(const KoszulDualCochain& o) const {
        return dim == o.dim && degree == o.degree && values == o.values;
    }
};

/**
 * Group-side differential: (df)(t_1..t_{n+1}) = f(t_2..t_{n+1})
 * + sum_i (-1)^i f(.., G(t_i, t_{i+1}), ..) + (-1)^{n+1} f(t_1..t_n),
 * exact modulo the truncation filtration.  Degree 0 maps to 0.
 */
CobarCochain cobar_diff(const FormalGroupLaw& g, const CobarCochain& c);

/**
 * Lie-algebra-side differential with trivial coefficients:
 * (dw)(x_0..x_n) = sum_{r<s} (-1)^{r+s} w([x_r, x_s], rest).
 */
CECochain ce_diff(const LieAlgebra& L, const CECochain& w);

/**
 * Boundary of the free resolution U (x) Lambda^*:
 * d(u (x) e_{i_1}^..^e_{i_n}) = sum_{k<l} (-1)^{k+l} u (x) [e_{i_k}, e_{i_l}]
 * ^ rest + sum_j (-1)^j u e_{i_j} (x) rest, with the products u e_{i_j}
 * rewritten onto the ordered basis.  Lowers the wedge degree by one.
 */
KoszulElement koszul_diff(const LieAlgebra& L, const KoszulElement& x);

/// slot-shift isomorphism: prepend the empty leading slot / plug the unit back in
UCochain iota(const UCochain& c);
UCochain iota_inverse(const UCochain& c);

/**
 * Cochain differential on tensor powers of U: counit on the outer slots,
 * slot merges (ordered-basis products) inside, alternating signs.  Output
 * support is enumerated over keys with each slot of total degree <= slot_cap,
 * matching the capped representation.  Works on both flavors; the
 * homogeneous case evaluates through the counit-twisted extension.
 */
UCochain ucochain_diff(const LieAlgebra& L, const UCochain& c, int slot_cap);

/**
 * Precompose a homogeneous cochain with unit (x) (antisymmetrization
 * Lambda^n -> U^{(x)n}): the (u, wedge) value is the signed sum over
 * permutations of the wedge letters, evaluated through the counit twist
 * (so the support stays on the empty u-slot).
 */
KoszulDualCochain antisym_pullback(const UCochain& c, const LieAlgebra& L);

/// evaluate on unit (x) wedge; explicit inverse of the stored representations
CECochain kappa(const KoszulDualCochain& f);
KoszulDualCochain kappa_inverse(const CECochain& w);

/// functional pullback along koszul_diff (raises degree by one)
KoszulDualCochain koszul_dual_diff(const LieAlgebra& L, const KoszulDualCochain& f);

/// apply the filtered dual morphism slot-by-slot: multilinear tensor extension
UCochain tals_blockwise(const FormalGroupLaw& g, const CobarCochain& c);

/**
 * Comparison morphism, full pipeline: slotwise dual morphism, slot-shift,
 * antisymmetrization pullback, evaluation at the unit.
 */
CECochain phi_full(const FormalGroupLaw& g, const CobarCochain& c);

/**
 * Comparison morphism, closed form: each multilinear body term
 * t_{i_1} (x) .. (x) t_{i_n} maps to the signed sorted wedge
 * e_{i_1}* ^ .. ^ e_{i_n}*; every non-multilinear term maps to 0.
 */
CECochain phi_explicit(const CobarCochain& c);

/// Betti numbers b_0..b_m over the rationals, by exact rank of the differentials
std::vector<std::size_t> ce_cohomology(const LieAlgebra& L);

struct ChainMapReport {
    std::string law;
    int degree = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    bool passed = true;
    std::string counterexample; // body text of the first failing cochain
};

/**
 * Seeded property check: for `trials` random degree-n cochains, assert that
 * the comparison morphism carries the group-side differential to the
 * Lie-algebra-side one on the nose.
 */
ChainMapReport chain_map_check(const FormalGroupLaw& g, int n, int trials, std::uint64_t seed);

std::string chain_map_report_json(const ChainMapReport& r);

/// integer coefficients in [-3,3]\{0}, monomial degrees in [1, D-1], deterministic in rng
CobarCochain random_cobar_cochain(std::size_t m, int n, int trunc, Rng& rng);

} // namespace fgl
