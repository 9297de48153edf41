#include "fgl/dual_u.hpp"

#include <stdexcept>

namespace fgl {

DualUElement::DualUElement(std::size_t dim, int cap) : dim_(dim), cap_(cap) {
    if (dim == 0) throw std::invalid_argument("dual element: dimension must be positive");
    if (cap < 0) throw std::invalid_argument("dual element: negative cap");
}

DualUElement DualUElement::unit(std::size_t dim, int cap) {
    DualUElement a(dim, cap);
    a.add_term(MultiIndex(dim), 1);
    return a;
}

DualUElement DualUElement::basis(std::size_t dim, int cap, const MultiIndex& j) {
    DualUElement a(dim, cap);
    a.add_term(j, 1);
    return a;
}

Rational DualUElement::coeff(const MultiIndex& j) const {
    auto it = terms_.find(j);
    return it == terms_.end() ? Rational(0) : it->second;
}

void DualUElement::add_term(const MultiIndex& j, const Rational& c) {
    if (j.size() != dim_) throw std::invalid_argument("dual element: index arity mismatch");
    if (c == 0 || j.total_degree() > cap_) return;
    auto [it, inserted] = terms_.emplace(j, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DualUElement DualUElement::operator+(const DualUElement& o) const {
    if (dim_ != o.dim_ || cap_ != o.cap_)
        throw std::invalid_argument("dual element add: shape mismatch");
    DualUElement out(*this);
    for (const auto& [j, c] : o.terms_) out.add_term(j, c);
    return out;
}

DualUElement DualUElement::operator-(const DualUElement& o) const {
    if (dim_ != o.dim_ || cap_ != o.cap_)
        throw std::invalid_argument("dual element sub: shape mismatch");
    DualUElement out(*this);
    for (const auto& [j, c] : o.terms_) out.add_term(j, -c);
    return out;
}

DualUElement DualUElement::operator*(const Rational& c) const {
    DualUElement out(dim_, cap_);
    if (c == 0) return out;
    for (const auto& [j, v] : terms_) out.add_term(j, v * c);
    return out;
}

bool DualUElement::operator==(const DualUElement& o) const {
    return dim_ == o.dim_ && cap_ == o.cap_ && terms_ == o.terms_;
}

int dual_filtration_degree(const DualUElement& a) {
    if (a.is_zero()) return a.cap() + 1;
    return a.terms().begin()->first.total_degree();
}

DualUElement ustar_mul(const DualUElement& a, const DualUElement& b) {
    if (a.dim() != b.dim() || a.cap() != b.cap())
        throw std::invalid_argument("ustar_mul: shape mismatch");
    DualUElement out(a.dim(), a.cap());
    for (const auto& [r, cr] : a.terms()) {
        const int dr = r.total_degree();
        if (dr > a.cap()) continue;
        for (const auto& [s, cs] : b.terms()) {
            if (dr + s.total_degree() > a.cap()) break; // graded-lex order
            Integer binom = 1;
            for (std::size_t i = 0; i < a.dim(); ++i) binom *= binomial(r[i] + s[i], r[i]);
            out.add_term(r + s, cr * cs * Rational(binom));
        }
    }
    return out;
}

DualPairMap ustar_comultiply(const DualUElement& a) {
    DualPairMap out;
    const std::size_t m = a.dim();
    for (const auto& [r, c] : a.terms()) {
        // enumerate all splits l + k = r componentwise
        MultiIndex l(m);
        while (true) {
            MultiIndex k(m);
            for (std::size_t i = 0; i < m; ++i) k[i] = r[i] - l[i];
            auto key = std::make_pair(l, k);
            auto [it, inserted] = out.emplace(key, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
            // odometer over 0 <= l <= r
            std::size_t pos = 0;
            while (pos < m) {
                if (l[pos] < r[pos]) {
                    l[pos] += 1;
                    break;
                }
                l[pos] = 0;
                ++pos;
            }
            if (pos == m) break;
        }
    }
    return out;
}

std::string to_text(const DualUElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [j, c] : a.terms()) {
        Rational v = c;
        if (first) {
            if (v < 0) {
                out += "-";
                v = -v;
            }
            first = false;
        } else {
            out += (v < 0) ? " - " : " + ";
            if (v < 0) v = -v;
        }
        out += rational_to_string(v);
        std::string factors;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (j[i] == 0) continue;
            if (!factors.empty()) factors += " ";
            factors += "d";
            if (j[i] > 1) factors += "^" + std::to_string(j[i]);
            factors += " ";
            factors += (a.dim() == 1) ? "t" : "t" + std::to_string(i + 1);
        }
        if (!factors.empty()) {
            out += "*";
            out += factors;
        }
    }
    return out;
}

} // namespace fgl
