#include "fgl/pbw.hpp"

#include <utility>

namespace fgl {

void u_add_term(UElement& u, const MultiIndex& j, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = u.emplace(j, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) u.erase(it);
    }
}

UElement straighten_word(const LieAlgebra& L, const std::vector<int>& word) {
    const std::size_t m = L.dim();
    UElement out;
    std::vector<std::pair<std::vector<int>, Rational>> work{{word, Rational(1)}};

    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();

        std::size_t i = 0;
        while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;

        if (i + 1 >= w.size()) { // already nondecreasing
            MultiIndex j(m);
            for (int letter : w) j[static_cast<std::size_t>(letter)] += 1;
            u_add_term(out, j, c);
            continue;
        }

        // e_a e_b = e_b e_a + [e_a, e_b] at the first descent
        const int a = w[i], b = w[i + 1];
        std::vector<int> swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        work.emplace_back(std::move(swapped), c);
        for (std::size_t k = 0; k < m; ++k) {
            const Rational& ck =
                L.bracket_coeff(static_cast<std::size_t>(a), static_cast<std::size_t>(b), k);
            if (ck == 0) continue;
            std::vector<int> shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(i));
            shorter.push_back(static_cast<int>(k));
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
            work.emplace_back(std::move(shorter), c * ck);
        }
    }
    return out;
}

UElement u_product(const LieAlgebra& L, const MultiIndex& a, const MultiIndex& b) {
    std::vector<int> word = sorted_word(a);
    std::vector<int> wb = sorted_word(b);
    word.insert(word.end(), wb.begin(), wb.end());
    return straighten_word(L, word);
}

UElement u_mul(const LieAlgebra& L, const UElement& a, const UElement& b) {
    UElement out;
    for (const auto& [ja, ca] : a)
        for (const auto& [jb, cb] : b)
            for (const auto& [jw, cw] : u_product(L, ja, jb)) u_add_term(out, jw, ca * cb * cw);
    return out;
}

Rational u_counit(const UElement& a, std::size_t dim) {
    auto it = a.find(MultiIndex(dim));
    return it == a.end() ? Rational(0) : it->second;
}

} // namespace fgl
