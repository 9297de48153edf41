#include "fgl/complexes.hpp"

#include "fgl/matrix.hpp"
#include "fgl/pbw.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fgl {

namespace {

/// insertion sort; returns the permutation sign, or 0 when a letter repeats
int sort_with_sign(WedgeTuple& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i)
        for (std::size_t k = i; k > 0 && t[k] < t[k - 1]; --k) {
            std::swap(t[k], t[k - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return 0;
    return sign;
}

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

void require_increasing(const WedgeTuple& t, std::size_t m) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0 || t[i] >= static_cast<int>(m))
            throw std::invalid_argument("wedge index out of range");
        if (i > 0 && t[i] <= t[i - 1])
            throw std::invalid_argument("wedge tuple must be strictly increasing");
    }
}

} // namespace

CobarCochain::CobarCochain(std::size_t m, int n, TruncatedSeries b)
    : dim(m), degree(n), body(std::move(b)) {
    if (n < 0) throw std::invalid_argument("cochain degree must be non-negative");
    if (body.num_vars() != m * static_cast<std::size_t>(n))
        throw std::invalid_argument("cochain body must have degree*dim variables");
}

std::vector<WedgeTuple> wedge_tuples(std::size_t m, int k) {
    std::vector<WedgeTuple> out;
    if (k < 0 || static_cast<std::size_t>(k) > m) return out;
    WedgeTuple cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < static_cast<int>(m); ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

CECochain::CECochain(std::size_t dim, int degree) : dim_(dim), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("cochain degree must be non-negative");
}

Rational CECochain::coeff(const WedgeTuple& t) const {
    auto it = values_.find(t);
    return it == values_.end() ? Rational(0) : it->second;
}

void CECochain::add_term(const WedgeTuple& t, const Rational& c) {
    if (t.size() != static_cast<std::size_t>(degree_))
        throw std::invalid_argument("wedge tuple length must equal the cochain degree");
    require_increasing(t, dim_);
    if (c == 0) return;
    auto [it, inserted] = values_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) values_.erase(it);
    }
}

Rational CECochain::eval(const WedgeTuple& t) const {
    WedgeTuple s = t;
    const int sign = sort_with_sign(s);
    if (sign == 0) return 0;
    return coeff(s) * sign;
}

CECochain CECochain::operator+(const CECochain& o) const {
    if (dim_ != o.dim_ || degree_ != o.degree_)
        throw std::invalid_argument("cochain shape mismatch");
    CECochain out = *this;
    for (const auto& [t, c] : o.values_) out.add_term(t, c);
    return out;
}

CECochain CECochain::operator-(const CECochain& o) const {
    if (dim_ != o.dim_ || degree_ != o.degree_)
        throw std::invalid_argument("cochain shape mismatch");
    CECochain out = *this;
    for (const auto& [t, c] : o.values_) out.add_term(t, -c);
    return out;
}

bool CECochain::operator==(const CECochain& o) const {
    return dim_ == o.dim_ && degree_ == o.degree_ && values_ == o.values_;
}

std::string to_text(const CECochain& w) {
    if (w.values().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : w.values()) {
        if (first) {
            out += rational_to_string(c);
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
            out += rational_to_string(abs(c));
        }
        for (std::size_t i = 0; i < t.size(); ++i) {
            out += (i == 0) ? "*" : " ∧ ";
            out += "e" + std::to_string(t[i] + 1) + "^";
        }
    }
    return out;
}

Rational UCochain::coeff(const std::vector<MultiIndex>& key) const {
    auto it = values.find(key);
    return it == values.end() ? Rational(0) : it->second;
}

void UCochain::add_term(const std::vector<MultiIndex>& key, const Rational& c) {
    if (key.size() != slots()) throw std::invalid_argument("key has the wrong slot count");
    for (const MultiIndex& j : key)
        if (j.size() != dim) throw std::invalid_argument("slot index has the wrong length");
    if (c == 0) return;
    auto [it, inserted] = values.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) values.erase(it);
    }
}

void KoszulElement::add_term(const MultiIndex& u, const WedgeTuple& w, const Rational& c) {
    if (u.size() != dim) throw std::invalid_argument("ordered-basis index has the wrong length");
    if (w.size() != static_cast<std::size_t>(degree))
        throw std::invalid_argument("wedge tuple length must equal the element degree");
    require_increasing(w, dim);
    if (c == 0) return;
    auto key = std::make_pair(u, w);
    auto [it, inserted] = terms.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational KoszulDualCochain::coeff(const MultiIndex& u, const WedgeTuple& w) const {
    auto it = values.find(std::make_pair(u, w));
    return it == values.end() ? Rational(0) : it->second;
}

void KoszulDualCochain::add_term(const MultiIndex& u, const WedgeTuple& w, const Rational& c) {
    if (u.size() != dim) throw std::invalid_argument("ordered-basis index has the wrong length");
    if (w.size() != static_cast<std::size_t>(degree))
        throw std::invalid_argument("wedge tuple length must equal the cochain degree");
    require_increasing(w, dim);
    if (c == 0) return;
    auto key = std::make_pair(u, w);
    auto [it, inserted] = values.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) values.erase(it);
    }
}

CobarCochain cobar_diff(const FormalGroupLaw& g, const CobarCochain& c) {
    if (c.dim != g.dim()) throw std::invalid_argument("cobar_diff: dimension mismatch");
    if (c.body.trunc() != g.trunc()) throw std::invalid_argument("cobar_diff: truncation mismatch");
    const std::size_t m = c.dim;
    const int n = c.degree;
    const int D = c.body.trunc();
    const std::size_t nv = (static_cast<std::size_t>(n) + 1) * m;

    // drop-the-first-argument face: blocks shift right by one
    std::vector<std::size_t> shift(static_cast<std::size_t>(n) * m);
    std::iota(shift.begin(), shift.end(), m);
    TruncatedSeries out = reindex_vars(c.body, nv, shift);

    // inner faces: arguments i, i+1 fused through the law
    for (int i = 1; i <= n; ++i) {
        std::vector<TruncatedSeries> subs;
        subs.reserve(static_cast<std::size_t>(n) * m);
        for (std::size_t b = 0; b < static_cast<std::size_t>(n); ++b) {
            for (std::size_t v = 0; v < m; ++v) {
                if (b + 1 < static_cast<std::size_t>(i)) {
                    subs.push_back(TruncatedSeries::variable(nv, D, b * m + v));
                } else if (b + 1 == static_cast<std::size_t>(i)) {
                    std::vector<std::size_t> gmap(2 * m);
                    for (std::size_t x = 0; x < m; ++x) {
                        gmap[x] = (static_cast<std::size_t>(i) - 1) * m + x;
                        gmap[m + x] = static_cast<std::size_t>(i) * m + x;
                    }
                    subs.push_back(reindex_vars(g.component(v), nv, gmap));
                } else {
                    subs.push_back(TruncatedSeries::variable(nv, D, (b + 1) * m + v));
                }
            }
        }
        const TruncatedSeries face = substitute(c.body, subs);
        out = (parity_sign(i) > 0) ? out + face : out - face;
    }

    // drop-the-last-argument face
    std::vector<std::size_t> ident(static_cast<std::size_t>(n) * m);
    std::iota(ident.begin(), ident.end(), std::size_t{0});
    const TruncatedSeries last = reindex_vars(c.body, nv, ident);
    out = (parity_sign(n + 1) > 0) ? out + last : out - last;

    return CobarCochain(m, n + 1, out);
}

CECochain ce_diff(const LieAlgebra& L, const CECochain& w) {
    if (w.dim() != L.dim()) throw std::invalid_argument("ce_diff: dimension mismatch");
    const std::size_t m = L.dim();
    const int n = w.degree();
    CECochain out(m, n + 1);
    if (w.is_zero()) return out;
    for (const WedgeTuple& T : wedge_tuples(m, n + 1)) {
        Rational val = 0;
        for (int r = 0; r <= n; ++r) {
            for (int s = r + 1; s <= n; ++s) {
                WedgeTuple rest;
                rest.reserve(static_cast<std::size_t>(n) - 1);
                for (int q = 0; q <= n; ++q)
                    if (q != r && q != s) rest.push_back(T[static_cast<std::size_t>(q)]);
                for (std::size_t k = 0; k < m; ++k) {
                    const Rational& cc =
                        L.bracket_coeff(static_cast<std::size_t>(T[static_cast<std::size_t>(r)]),
                                        static_cast<std::size_t>(T[static_cast<std::size_t>(s)]), k);
                    if (cc == 0) continue;
                    WedgeTuple arg;
                    arg.reserve(rest.size() + 1);
                    arg.push_back(static_cast<int>(k));
                    arg.insert(arg.end(), rest.begin(), rest.end());
                    val += Rational(parity_sign(r + s)) * cc * w.eval(arg);
                }
            }
        }
        if (val != 0) out.add_term(T, val);
    }
    return out;
}

KoszulElement koszul_diff(const LieAlgebra& L, const KoszulElement& x) {
    if (x.dim != L.dim()) throw std::invalid_argument("koszul_diff: dimension mismatch");
    if (x.degree < 1) throw std::invalid_argument("koszul_diff: degree must be at least 1");
    const std::size_t m = x.dim;
    const int n = x.degree;
    KoszulElement out(m, n - 1);
    for (const auto& [key, c] : x.terms) {
        const MultiIndex& u = key.first;
        const WedgeTuple& w = key.second;
        // bracket faces
        for (int k = 0; k < n; ++k) {
            for (int l = k + 1; l < n; ++l) {
                WedgeTuple rest;
                for (int q = 0; q < n; ++q)
                    if (q != k && q != l) rest.push_back(w[static_cast<std::size_t>(q)]);
                for (std::size_t t = 0; t < m; ++t) {
                    const Rational& cc =
                        L.bracket_coeff(static_cast<std::size_t>(w[static_cast<std::size_t>(k)]),
                                        static_cast<std::size_t>(w[static_cast<std::size_t>(l)]), t);
                    if (cc == 0) continue;
                    WedgeTuple arg;
                    arg.push_back(static_cast<int>(t));
                    arg.insert(arg.end(), rest.begin(), rest.end());
                    const int sign = sort_with_sign(arg);
                    if (sign == 0) continue;
                    out.add_term(u, arg, Rational(parity_sign(k + l) * sign) * cc * c);
                }
            }
        }
        // action faces: u picks up one wedge letter on the right
        for (int j = 0; j < n; ++j) {
            WedgeTuple rest;
            for (int q = 0; q < n; ++q)
                if (q != j) rest.push_back(w[static_cast<std::size_t>(q)]);
            const UElement prod =
                u_product(L, u, MultiIndex::unit(m, static_cast<std::size_t>(w[static_cast<std::size_t>(j)])));
            for (const auto& [uu, pc] : prod)
                out.add_term(uu, rest, Rational(parity_sign(j)) * pc * c);
        }
    }
    return out;
}

UCochain iota(const UCochain& c) {
    if (c.homogeneous) throw std::invalid_argument("iota: input is already homogeneous");
    UCochain out(c.dim, c.degree, true);
    const MultiIndex zero(c.dim);
    for (const auto& [key, v] : c.values) {
        std::vector<MultiIndex> k;
        k.reserve(key.size() + 1);
        k.push_back(zero);
        k.insert(k.end(), key.begin(), key.end());
        out.add_term(k, v);
    }
    return out;
}

UCochain iota_inverse(const UCochain& c) {
    if (!c.homogeneous) throw std::invalid_argument("iota_inverse: input is not homogeneous");
    UCochain out(c.dim, c.degree, false);
    for (const auto& [key, v] : c.values) {
        if (!key.front().is_zero()) continue; // off the stored slice: killed by the unit plug-in
        out.add_term(std::vector<MultiIndex>(key.begin() + 1, key.end()), v);
    }
    return out;
}

namespace {

/// counit-twisted evaluation of a homogeneous cochain at ordered-basis slots
Rational hom_eval(const UCochain& c, const std::vector<MultiIndex>& args) {
    if (!args.front().is_zero()) return 0;
    return c.coeff(args);
}

/// odometer over tuples drawn from `grid`, invoking fn on each
void for_each_tuple(const std::vector<MultiIndex>& grid, std::size_t len,
                    const std::function<void(const std::vector<MultiIndex>&)>& fn) {
    std::vector<MultiIndex> cur;
    std::function<void()> rec = [&]() {
        if (cur.size() == len) {
            fn(cur);
            return;
        }
        for (const MultiIndex& j : grid) {
            cur.push_back(j);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

} // namespace

UCochain ucochain_diff(const LieAlgebra& L, const UCochain& c, int slot_cap) {
    if (c.dim != L.dim()) throw std::invalid_argument("ucochain_diff: dimension mismatch");
    const std::size_t m = c.dim;
    const int n = c.degree;
    const std::vector<MultiIndex> grid = indices_up_to_degree(m, slot_cap);
    const MultiIndex zero(m);
    UCochain out(m, n + 1, c.homogeneous);

    for_each_tuple(grid, static_cast<std::size_t>(n) + 1, [&](const std::vector<MultiIndex>& K) {
        Rational val = 0;
        if (!c.homogeneous) {
            // counit on the first argument
            if (K.front().is_zero())
                val += c.coeff(std::vector<MultiIndex>(K.begin() + 1, K.end()));
            // adjacent merges, 1-based position sign
            for (int i = 1; i <= n; ++i) {
                const UElement prod = u_product(L, K[static_cast<std::size_t>(i - 1)],
                                                K[static_cast<std::size_t>(i)]);
                for (const auto& [w, pc] : prod) {
                    std::vector<MultiIndex> merged;
                    merged.reserve(static_cast<std::size_t>(n));
                    merged.insert(merged.end(), K.begin(), K.begin() + (i - 1));
                    merged.push_back(w);
                    merged.insert(merged.end(), K.begin() + (i + 1), K.end());
                    val += Rational(parity_sign(i)) * pc * c.coeff(merged);
                }
            }
            // counit on the last argument
            if (K.back().is_zero())
                val += Rational(parity_sign(n + 1)) *
                       c.coeff(std::vector<MultiIndex>(K.begin(), K.end() - 1));
            if (val != 0) out.add_term(K, val);
        } else {
            // simplicial merges on (unit, K...), evaluated through the counit twist
            std::vector<MultiIndex> args;
            args.reserve(K.size() + 1);
            args.push_back(zero);
            args.insert(args.end(), K.begin(), K.end());
            for (int i = 0; i <= n; ++i) {
                const UElement prod = u_product(L, args[static_cast<std::size_t>(i)],
                                                args[static_cast<std::size_t>(i + 1)]);
                for (const auto& [w, pc] : prod) {
                    std::vector<MultiIndex> merged;
                    merged.reserve(args.size() - 1);
                    merged.insert(merged.end(), args.begin(), args.begin() + i);
                    merged.push_back(w);
                    merged.insert(merged.end(), args.begin() + (i + 2), args.end());
                    val += Rational(parity_sign(i)) * pc * hom_eval(c, merged);
                }
            }
            if (args.back().is_zero())
                val += Rational(parity_sign(n + 1)) *
                       hom_eval(c, std::vector<MultiIndex>(args.begin(), args.end() - 1));
            if (val != 0) {
                std::vector<MultiIndex> key;
                key.reserve(K.size() + 1);
                key.push_back(zero);
                key.insert(key.end(), K.begin(), K.end());
                out.add_term(key, val);
            }
        }
    });
    return out;
}

KoszulDualCochain antisym_pullback(const UCochain& c, const LieAlgebra& L) {
    if (!c.homogeneous) throw std::invalid_argument("antisym_pullback: input must be homogeneous");
    if (c.dim != L.dim()) throw std::invalid_argument("antisym_pullback: dimension mismatch");
    const std::size_t m = c.dim;
    const int n = c.degree;
    const MultiIndex zero(m);
    KoszulDualCochain out(m, n);
    for (const WedgeTuple& w : wedge_tuples(m, n)) {
        Rational val = 0;
        std::vector<int> idx(static_cast<std::size_t>(n));
        std::iota(idx.begin(), idx.end(), 0);
        do {
            int inv = 0;
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = a + 1; b < idx.size(); ++b)
                    if (idx[a] > idx[b]) ++inv;
            std::vector<MultiIndex> key;
            key.reserve(idx.size() + 1);
            key.push_back(zero);
            for (int pos : idx)
                key.push_back(MultiIndex::unit(m, static_cast<std::size_t>(w[static_cast<std::size_t>(pos)])));
            val += Rational(parity_sign(inv)) * c.coeff(key);
        } while (std::next_permutation(idx.begin(), idx.end()));
        if (val != 0) out.add_term(zero, w, val);
    }
    return out;
}

CECochain kappa(const KoszulDualCochain& f) {
    CECochain out(f.dim, f.degree);
    for (const auto& [key, v] : f.values)
        if (key.first.is_zero()) out.add_term(key.second, v);
    return out;
}

KoszulDualCochain kappa_inverse(const CECochain& w) {
    KoszulDualCochain out(w.dim(), w.degree());
    const MultiIndex zero(w.dim());
    for (const auto& [t, v] : w.values()) out.add_term(zero, t, v);
    return out;
}

KoszulDualCochain koszul_dual_diff(const LieAlgebra& L, const KoszulDualCochain& f) {
    if (f.dim != L.dim()) throw std::invalid_argument("koszul_dual_diff: dimension mismatch");
    for (const auto& [key, v] : f.values)
        if (!key.first.is_zero())
            throw std::invalid_argument("koszul_dual_diff: input must be supported on the unit slice");
    // the action faces of the boundary land in positive ordered-basis degree,
    // which a unit-slice functional kills, so the pullback stays on the slice
    const std::size_t m = f.dim;
    const int n = f.degree;
    const MultiIndex zero(m);
    KoszulDualCochain out(m, n + 1);
    for (const WedgeTuple& w : wedge_tuples(m, n + 1)) {
        KoszulElement basis(m, n + 1);
        basis.add_term(zero, w, 1);
        const KoszulElement b = koszul_diff(L, basis);
        Rational val = 0;
        for (const auto& [key, c] : b.terms) val += c * f.coeff(key.first, key.second);
        if (val != 0) out.add_term(zero, w, val);
    }
    return out;
}

UCochain tals_blockwise(const FormalGroupLaw& g, const CobarCochain& c) {
    if (c.dim != g.dim()) throw std::invalid_argument("tals_blockwise: dimension mismatch");
    if (c.body.trunc() != g.trunc())
        throw std::invalid_argument("tals_blockwise: truncation mismatch");
    const std::size_t m = c.dim;
    const std::size_t n = static_cast<std::size_t>(c.degree);
    const int D = c.body.trunc();

    UCochain out(m, c.degree, false);
    std::map<MultiIndex, DualUElement> cache;
    const auto factor_of = [&](const MultiIndex& blk) -> const DualUElement& {
        auto it = cache.find(blk);
        if (it == cache.end())
            it = cache.emplace(blk, tals(g, TruncatedSeries::monomial(m, D, blk, 1))).first;
        return it->second;
    };

    for (const auto& [mono, coeff] : c.body.terms()) {
        std::vector<MultiIndex> blocks(n, MultiIndex(m));
        for (std::size_t v = 0; v < n * m; ++v) blocks[v / m][v % m] = mono[v];
        std::vector<const DualUElement*> factors;
        factors.reserve(n);
        for (const MultiIndex& blk : blocks) factors.push_back(&factor_of(blk));

        std::vector<MultiIndex> key(n, MultiIndex(m));
        std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t b,
                                                                    const Rational& acc) {
            if (b == n) {
                out.add_term(key, acc);
                return;
            }
            for (const auto& [j, cv] : factors[b]->terms()) {
                key[b] = j;
                rec(b + 1, acc * cv);
            }
        };
        rec(0, coeff);
    }
    return out;
}

CECochain phi_full(const FormalGroupLaw& g, const CobarCochain& c) {
    const LieAlgebra L = lie_from_fgl(g);
    return kappa(antisym_pullback(iota(tals_blockwise(g, c)), L));
}

CECochain phi_explicit(const CobarCochain& c) {
    const std::size_t m = c.dim;
    const std::size_t n = static_cast<std::size_t>(c.degree);
    CECochain out(m, c.degree);
    for (const auto& [mono, coeff] : c.body.terms()) {
        // only terms linear in every slot survive the gradient-and-wedge map
        WedgeTuple letters;
        letters.reserve(n);
        bool multilinear = true;
        for (std::size_t b = 0; b < n && multilinear; ++b) {
            int deg = 0;
            int var = -1;
            for (std::size_t v = 0; v < m; ++v) {
                const int e = mono[b * m + v];
                if (e > 0) {
                    deg += e;
                    var = static_cast<int>(v);
                }
            }
            if (deg != 1)
                multilinear = false;
            else
                letters.push_back(var);
        }
        if (!multilinear) continue;
        const int sign = sort_with_sign(letters);
        if (sign == 0) continue;
        out.add_term(letters, coeff * sign);
    }
    return out;
}

std::vector<std::size_t> ce_cohomology(const LieAlgebra& L) {
    const std::size_t m = L.dim();
    std::vector<std::size_t> rk(m + 1, 0); // rk[n] = rank of the degree-n differential
    for (std::size_t n = 0; n < m; ++n) {
        const auto dom = wedge_tuples(m, static_cast<int>(n));
        const auto cod = wedge_tuples(m, static_cast<int>(n) + 1);
        RationalMatrix M(cod.size(), dom.size());
        for (std::size_t col = 0; col < dom.size(); ++col) {
            CECochain e(m, static_cast<int>(n));
            e.add_term(dom[col], 1);
            const CECochain de = ce_diff(L, e);
            for (std::size_t row = 0; row < cod.size(); ++row) M.at(row, col) = de.coeff(cod[row]);
        }
        rk[n] = rank(M);
    }
    std::vector<std::size_t> betti(m + 1);
    for (std::size_t n = 0; n <= m; ++n) {
        std::size_t b = binomial(static_cast<long>(m), static_cast<long>(n)).get_ui();
        if (n < m) b -= rk[n];
        if (n > 0) b -= rk[n - 1];
        betti[n] = b;
    }
    return betti;
}

CobarCochain random_cobar_cochain(std::size_t m, int n, int trunc, Rng& rng) {
    const std::size_t nv = m * static_cast<std::size_t>(n);
    TruncatedSeries body(nv, trunc);
    if (n == 0) {
        body.add_term(MultiIndex(0), Rational(static_cast<long>(rng.range(-3, 3))));
        return CobarCochain(m, n, body);
    }
    const int nterms = 1 + static_cast<int>(rng.below(3));
    for (int t = 0; t < nterms; ++t) {
        const int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(trunc - 1)));
        MultiIndex mono(nv);
        for (int q = 0; q < d; ++q) mono[static_cast<std::size_t>(rng.below(nv))] += 1;
        long coeff = static_cast<long>(rng.range(-3, 3));
        while (coeff == 0) coeff = static_cast<long>(rng.range(-3, 3));
        body.add_term(mono, Rational(coeff));
    }
    return CobarCochain(m, n, body);
}

ChainMapReport chain_map_check(const FormalGroupLaw& g, int n, int trials, std::uint64_t seed) {
    ChainMapReport r;
    r.degree = n;
    r.trials = trials;
    r.seed = seed;
    Rng rng(seed);
    const LieAlgebra L = lie_from_fgl(g);
    for (int t = 0; t < trials; ++t) {
        const CobarCochain c = random_cobar_cochain(g.dim(), n, g.trunc(), rng);
        const CECochain lhs = phi_explicit(cobar_diff(g, c));
        const CECochain rhs = ce_diff(L, phi_explicit(c));
        if (lhs != rhs) {
            r.passed = false;
            r.counterexample = to_text(c.body);
            break;
        }
    }
    return r;
}

std::string chain_map_report_json(const ChainMapReport& r) {
    nlohmann::json j;
    j["fgl"] = r.law;
    j["n"] = r.degree;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["passed"] = r.passed;
    if (!r.passed) j["counterexample"] = r.counterexample;
    return j.dump(2) + "\n";
}

} // namespace fgl
