#pragma once

#include "fgl/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace fgl {

/// an evaluation refused to proceed rather than return an uncertified result
struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Element of the valuation ring tracked modulo p^N: a residue in [0, p^N)
 * with its exact valuation.  A zero residue has unknown (infinite) valuation
 * at this precision; val() reports that as nullopt and every consumer prints
 * it as "inf".  Arithmetic between mismatched primes throws; the result of a
 * mixed-precision operation carries the smaller precision.
 */
class PadicScalar {
public:
    PadicScalar(long p, int precision, const Integer& value);

    /// reduce a rational with non-negative valuation; throws CertificationError otherwise
    static PadicScalar from_rational(long p, int precision, const Rational& q);

    long prime() const { return p_; }
    int precision() const { return precision_; }
    const Integer& residue() const { return residue_; }
    const Integer& modulus() const { return modulus_; }

    bool is_zero() const { return residue_ == 0; }
    std::optional<int> val() const;

    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator-() const;
    bool operator==(const PadicScalar& o) const;
    bool operator!=(const PadicScalar& o) const { return !(*this == o); }

private:
    long p_;
    int precision_;
    Integer modulus_; // p^precision
    Integer residue_; // in [0, modulus)
};

/// "inf" for nullopt, else the decimal value
std::string valuation_to_string(const std::optional<int>& v);

/// exact v_p(n!) by summing floor(n/p^k)
long legendre_vp_factorial(long n, long p);

} // namespace fgl
