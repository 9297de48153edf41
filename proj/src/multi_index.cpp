#include "fgl/multi_index.hpp"

namespace fgl {

namespace {
void fill_degree(std::size_t slot, int remaining, MultiIndex& cur,
                 std::vector<MultiIndex>& out) {
    if (slot + 1 == cur.size()) {
        cur[slot] = remaining;
        out.push_back(cur);
        cur[slot] = 0;
        return;
    }
    for (int e = 0; e <= remaining; ++e) { // ascending lex within the degree level
        cur[slot] = e;
        fill_degree(slot + 1, remaining - e, cur, out);
    }
    cur[slot] = 0;
}
} // namespace

std::vector<MultiIndex> indices_of_degree(std::size_t n, int d) {
    std::vector<MultiIndex> out;
    if (n == 0) {
        if (d == 0) out.push_back(MultiIndex(std::size_t{0}));
        return out;
    }
    MultiIndex cur(n);
    fill_degree(0, d, cur, out);
    return out;
}

std::vector<MultiIndex> indices_up_to_degree(std::size_t n, int d) {
    std::vector<MultiIndex> out;
    for (int k = 0; k <= d; ++k) {
        auto level = indices_of_degree(n, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<int> sorted_word(const MultiIndex& j) {
    std::vector<int> w;
    for (std::size_t i = 0; i < j.size(); ++i)
        for (int r = 0; r < j[i]; ++r) w.push_back(static_cast<int>(i));
    return w;
}

} // namespace fgl
