#pragma once

#include "fgl/multi_index.hpp"
#include "fgl/rational.hpp"

#include <limits>
#include <map>
#include <string>
#include <vector>

namespace fgl {

/// filtration degree of the zero series
inline constexpr int kFiltrationInfinity = std::numeric_limits<int>::max();

/**
 * Multivariate power series over Rational, truncated at a fixed total degree.
 *
 * Terms are a sparse map in graded-lexicographic order; a coefficient of zero
 * is never stored, so the zero series is the empty map and equality is plain
 * structural equality.  All operations discard monomials of total degree
 * above trunc(); every result is exact modulo that filtration cutoff.
 *
 * num_vars may be 0: such a series is a single constant (used for the
 * degree-0 cochains).
 */
class TruncatedSeries {
public:
    using TermMap = std::map<MultiIndex, Rational>;

    TruncatedSeries(std::size_t num_vars, int trunc);

    static TruncatedSeries constant(std::size_t num_vars, int trunc, const Rational& c);
    static TruncatedSeries variable(std::size_t num_vars, int trunc, std::size_t i);
    static TruncatedSeries monomial(std::size_t num_vars, int trunc, const MultiIndex& m,
                                    const Rational& c);

    std::size_t num_vars() const { return num_vars_; }
    int trunc() const { return trunc_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const MultiIndex& m) const;
    Rational constant_term() const;

    /// accumulate c into the coefficient of m (drops zero results and terms above trunc)
    void add_term(const MultiIndex& m, const Rational& c);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rational& c) const;

    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    std::size_t num_vars_;
    int trunc_;
    TermMap terms_;

    void require_compatible(const TruncatedSeries& o, const char* op) const;
};

/// smallest total degree with a nonzero term; kFiltrationInfinity for zero
int filtration_degree(const TruncatedSeries& f);

/**
 * Substitute subs[i] for variable i of f.  Every substituted series must have
 * zero constant term and live in a common variable space, so the composite is
 * exact modulo the truncation filtration.
 */
TruncatedSeries substitute(const TruncatedSeries& f, const std::vector<TruncatedSeries>& subs);

TruncatedSeries partial_derivative(const TruncatedSeries& f, std::size_t var);

/**
 * Relabel variables: variable i of f becomes variable var_map[i] of a series
 * in new_num_vars variables.  The map must be injective on the variables f
 * actually uses.  Cheaper than substitute() for plain block embeddings.
 */
TruncatedSeries reindex_vars(const TruncatedSeries& f, std::size_t new_num_vars,
                             const std::vector<std::size_t>& var_map);

/// terms of total degree exactly d
TruncatedSeries homogeneous_part(const TruncatedSeries& f, int d);

/// re-truncate to a lower degree (terms above new_trunc dropped)
TruncatedSeries truncate_to(const TruncatedSeries& f, int new_trunc);

/**
 * Canonical text form.  Terms in graded-lex order; first term keeps its sign
 * inline, later terms join with " + " / " - "; coefficients as "num" or
 * "num/den"; variable i prints as t{i+1}, or plain "t" when there is a single
 * variable; exponent 1 is bare.  The zero series prints as "0".
 */
std::string to_text(const TruncatedSeries& f);

/// parse the to_text grammar; throws std::invalid_argument with a character position
TruncatedSeries series_from_text(const std::string& text, std::size_t num_vars, int trunc);

} // namespace fgl
