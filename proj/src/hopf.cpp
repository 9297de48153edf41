#include "fgl/hopf.hpp"

#include "fgl/pbw.hpp"

#include <numeric>
#include <stdexcept>

namespace fgl {

namespace {

void require_function_shape(const FormalGroupLaw& g, const TruncatedSeries& f, const char* op) {
    if (f.num_vars() != g.dim())
        throw std::invalid_argument(std::string(op) + ": series must use dim variables");
    if (f.trunc() != g.trunc())
        throw std::invalid_argument(std::string(op) + ": truncation degree mismatch");
}

int block_degree(const MultiIndex& mono, std::size_t m, std::size_t block) {
    int d = 0;
    for (std::size_t v = block * m; v < (block + 1) * m; ++v) d += mono[v];
    return d;
}

/// keep terms whose finalized blocks 1..k-1 all have degree exactly 1 and
/// whose pending block is not yet dead
TruncatedSeries prune_expansion(const TruncatedSeries& cur, std::size_t m, std::size_t k) {
    TruncatedSeries out(cur.num_vars(), cur.trunc());
    for (const auto& [mono, c] : cur.terms()) {
        bool keep = block_degree(mono, m, 0) >= 1;
        for (std::size_t b = 1; keep && b < k; ++b) keep = block_degree(mono, m, b) == 1;
        if (keep) out.add_term(mono, c);
    }
    return out;
}

} // namespace

TruncatedSeries og_comultiply(const FormalGroupLaw& g, const TruncatedSeries& f) {
    require_function_shape(g, f, "og_comultiply");
    return substitute(f, g.components());
}

TruncatedSeries og_antipode_apply(const FormalGroupLaw& g, const TruncatedSeries& f) {
    require_function_shape(g, f, "og_antipode_apply");
    return substitute(f, antipode(g));
}

DualUElement tals(const FormalGroupLaw& g, const TruncatedSeries& f) {
    require_function_shape(g, f, "tals");
    const std::size_t m = g.dim();
    const int D = f.trunc();

    DualUElement out(m, D);
    out.add_term(MultiIndex(m), f.constant_term());

    // cur lives in k*m variables: block 0 is the factor still being expanded,
    // blocks 1..k-1 are finalized factors in tensor-position order and are
    // pruned to degree exactly 1 (only multilinear terms can be extracted)
    TruncatedSeries cur = f;
    for (int k = 1; k <= D; ++k) {
        const auto blocks = static_cast<std::size_t>(k);
        for (const MultiIndex& j : indices_of_degree(m, k)) {
            const std::vector<int> w = sorted_word(j);
            MultiIndex mono(blocks * m);
            for (std::size_t b = 0; b < blocks; ++b)
                mono[b * m + static_cast<std::size_t>(w[b])] = 1;
            out.add_term(j, cur.coeff(mono));
        }
        if (k == D) break;

        // expand the pending factor through the coproduct; its X half stays
        // pending, its Y half becomes the new finalized position 2
        const std::size_t nv = (blocks + 1) * m;
        std::vector<TruncatedSeries> subs;
        std::vector<std::size_t> extend(2 * m);
        std::iota(extend.begin(), extend.end(), std::size_t{0});
        for (std::size_t v = 0; v < m; ++v)
            subs.push_back(reindex_vars(g.component(v), nv, extend));
        for (std::size_t v = m; v < blocks * m; ++v)
            subs.push_back(TruncatedSeries::variable(nv, D, v + m));
        cur = prune_expansion(substitute(cur, subs), m, blocks + 1);
    }
    return out;
}

TruncatedSeries tals_inverse(const FormalGroupLaw& g, const DualUElement& u) {
    if (u.dim() != g.dim()) throw std::invalid_argument("tals_inverse: dimension mismatch");
    if (u.cap() != g.trunc()) throw std::invalid_argument("tals_inverse: cap mismatch");
    const std::size_t m = g.dim();
    const int D = g.trunc();

    TruncatedSeries out = TruncatedSeries::constant(m, D, u.coeff(MultiIndex(m)));
    for (int d = 1; d <= D; ++d) {
        const DualUElement residual = u - tals(g, out);
        for (const MultiIndex& j : indices_of_degree(m, d)) {
            const Rational c = residual.coeff(j);
            if (c != 0) out.add_term(j, c / Rational(j.index_factorial()));
        }
    }
    return out;
}

ModifiedRingReport modified_ring_check(const TruncatedSeries& f, long p) {
    if (p < 2) throw std::invalid_argument("modified_ring_check: prime must be >= 2");
    ModifiedRingReport report;
    report.prime = p;
    report.checked_degree = f.trunc();
    for (const auto& [j, c] : f.terms()) {
        const int v = valuation(c, p) + valuation(j.index_factorial(), p);
        if (v < 0) {
            report.member = false;
            report.witness = j;
            report.deficit = -v;
            break; // graded-lex-first failure
        }
    }
    return report;
}

DualPairMap ustar_comultiply_dual(const LieAlgebra& L, const DualUElement& a, int total_cap) {
    if (L.dim() != a.dim())
        throw std::invalid_argument("ustar_comultiply_dual: dimension mismatch");
    if (total_cap > a.cap())
        throw std::invalid_argument("ustar_comultiply_dual: cap exceeds element cap");

    DualPairMap out;
    const auto left = indices_up_to_degree(L.dim(), total_cap);
    for (const MultiIndex& j : left) {
        for (const MultiIndex& k : indices_up_to_degree(L.dim(), total_cap - j.total_degree())) {
            Rational val = 0;
            for (const auto& [w, cw] : u_product(L, j, k)) val += cw * a.coeff(w);
            if (val != 0) out.emplace(std::make_pair(j, k), val);
        }
    }
    return out;
}

} // namespace fgl
