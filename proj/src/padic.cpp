#include "fgl/padic.hpp"

namespace fgl {

PadicScalar::PadicScalar(long p, int precision, const Integer& value)
    : p_(p), precision_(precision), modulus_(int_pow(p, precision)) {
    if (p < 2) throw std::invalid_argument("prime must be at least 2");
    if (precision < 1) throw std::invalid_argument("precision must be at least 1");
    mpz_mod(residue_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

PadicScalar PadicScalar::from_rational(long p, int precision, const Rational& q) {
    if (q == 0) return PadicScalar(p, precision, 0);
    if (valuation(q, p) < 0)
        throw CertificationError("coefficient " + rational_to_string(q) +
                                 " is not integral at p = " + std::to_string(p));
    const Integer modulus = int_pow(p, precision);
    Integer den_inv;
    // the denominator is prime to p by the valuation check, hence invertible
    if (mpz_invert(den_inv.get_mpz_t(), q.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw CertificationError("denominator of " + rational_to_string(q) +
                                 " is not invertible modulo p^N");
    return PadicScalar(p, precision, q.get_num() * den_inv);
}

std::optional<int> PadicScalar::val() const {
    if (residue_ == 0) return std::nullopt;
    return valuation(residue_, p_);
}

namespace {

void require_same_prime(const PadicScalar& a, const PadicScalar& b) {
    if (a.prime() != b.prime())
        throw std::invalid_argument("arithmetic between different primes");
}

} // namespace

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    require_same_prime(*this, o);
    return PadicScalar(p_, std::min(precision_, o.precision_), residue_ + o.residue_);
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const {
    require_same_prime(*this, o);
    return PadicScalar(p_, std::min(precision_, o.precision_), residue_ - o.residue_);
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    require_same_prime(*this, o);
    return PadicScalar(p_, std::min(precision_, o.precision_), residue_ * o.residue_);
}

PadicScalar PadicScalar::operator-() const { return PadicScalar(p_, precision_, -residue_); }

bool PadicScalar::operator==(const PadicScalar& o) const {
    return p_ == o.p_ && precision_ == o.precision_ && residue_ == o.residue_;
}

std::string valuation_to_string(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("inf");
}

long legendre_vp_factorial(long n, long p) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    if (p < 2) throw std::invalid_argument("prime must be at least 2");
    long total = 0;
    for (long q = p; q <= n; q *= p) {
        total += n / q;
        if (q > n / p) break; // next q would overflow past n anyway
    }
    return total;
}

} // namespace fgl
