#include "fgl/rational.hpp"

#include <stdexcept>

namespace fgl {

Rational ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    // mpq_class(string) accepts "a/b" but also whitespace-liberal forms; be strict.
    for (char c : s) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("rational: bad character in '" + s + "'");
    }
    try {
        Rational q(s);
        if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int valuation(const Integer& n, long p) {
    if (n == 0) throw std::invalid_argument("valuation: zero argument");
    if (p < 2) throw std::invalid_argument("valuation: prime must be >= 2");
    Integer m = abs(n);
    Integer pz(p);
    int v = 0;
    Integer q, r;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

int valuation(const Rational& q, long p) {
    if (q == 0) throw std::invalid_argument("valuation: zero argument");
    int v = 0;
    if (q.get_num() != 0) v += valuation(Integer(q.get_num()), p);
    if (q.get_den() != 1) v -= valuation(Integer(q.get_den()), p);
    return v;
}

Integer int_pow(long base, int exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                  static_cast<unsigned long>(exp));
    if (base < 0 && (exp % 2) == 1) out = -out;
    return out;
}

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("binomial: bad arguments");
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

} // namespace fgl
