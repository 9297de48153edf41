#pragma once

#include "fgl/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace fgl {

/**
 * Exponent vector of a monomial.  Ordering is graded-lexicographic (total
 * degree first, then lexicographic), which is the canonical term order used
 * for storage, printing, and first-violation reporting everywhere in the
 * library.
 */
class MultiIndex {
public:
    explicit MultiIndex(std::size_t n) : e_(n, 0) {}
    MultiIndex(std::initializer_list<int> e) : e_(e) {}
    explicit MultiIndex(std::vector<int> e) : e_(std::move(e)) {}

    /// all zero except a 1 in slot i
    static MultiIndex unit(std::size_t n, std::size_t i) {
        MultiIndex m(n);
        m.e_[i] = 1;
        return m;
    }

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }

    int total_degree() const {
        int d = 0;
        for (int x : e_) d += x;
        return d;
    }

    bool is_zero() const {
        for (int x : e_)
            if (x != 0) return false;
        return true;
    }

    MultiIndex operator+(const MultiIndex& o) const {
        MultiIndex out(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
        return out;
    }

    /// product of per-slot factorials
    Integer index_factorial() const {
        Integer f = 1;
        for (int x : e_) f *= factorial(x);
        return f;
    }

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
    bool operator!=(const MultiIndex& o) const { return e_ != o.e_; }

    bool operator<(const MultiIndex& o) const {
        int da = total_degree(), db = o.total_degree();
        if (da != db) return da < db;
        return e_ < o.e_;
    }

    const std::vector<int>& exponents() const { return e_; }

    std::vector<int>::const_iterator begin() const { return e_.begin(); }
    std::vector<int>::const_iterator end() const { return e_.end(); }

private:
    std::vector<int> e_;
};

/// all exponent vectors of length n with total degree exactly d, graded-lex order
std::vector<MultiIndex> indices_of_degree(std::size_t n, int d);

/// all exponent vectors of length n with total degree <= d, graded-lex order
std::vector<MultiIndex> indices_up_to_degree(std::size_t n, int d);

/// the nondecreasing generator word of an exponent vector (slot i repeated e_i times)
std::vector<int> sorted_word(const MultiIndex& j);

} // namespace fgl
