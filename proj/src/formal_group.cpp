#include "fgl/formal_group.hpp"

#include <json.hpp>

#include <fstream>
#include <numeric>
#include <stdexcept>

namespace fgl {

std::string builtin_name(Builtin b) {
    switch (b) {
        case Builtin::Additive: return "additive";
        case Builtin::Multiplicative: return "multiplicative";
        case Builtin::Heisenberg: return "heisenberg";
        case Builtin::AxPlusB: return "ax_plus_b";
    }
    return "?";
}

std::optional<Builtin> builtin_from_name(const std::string& name) {
    if (name == "additive") return Builtin::Additive;
    if (name == "multiplicative") return Builtin::Multiplicative;
    if (name == "heisenberg") return Builtin::Heisenberg;
    if (name == "ax_plus_b") return Builtin::AxPlusB;
    return std::nullopt;
}

FormalGroupLaw::FormalGroupLaw(std::vector<TruncatedSeries> components)
    : m_(components.size()), comps_(std::move(components)) {
    if (m_ == 0) throw std::invalid_argument("formal group law: no components");
    trunc_ = comps_[0].trunc();
    for (const auto& g : comps_) {
        if (g.num_vars() != 2 * m_)
            throw std::invalid_argument("formal group law: component must use 2*dim variables");
        if (g.trunc() != trunc_)
            throw std::invalid_argument("formal group law: mixed truncation degrees");
        if (g.constant_term() != 0)
            throw std::invalid_argument("formal group law: nonzero constant term");
    }
    if (trunc_ < 2) throw std::invalid_argument("formal group law: truncation degree below 2");

    gamma_.assign(m_ * m_ * m_, Rational(0));
    for (std::size_t j = 0; j < m_; ++j)
        for (std::size_t l = 0; l < m_; ++l)
            for (std::size_t k = 0; k < m_; ++k) {
                MultiIndex mono(2 * m_);
                mono[l] += 1;
                mono[m_ + k] += 1;
                gamma_[(j * m_ + l) * m_ + k] = comps_[j].coeff(mono);
            }
}

FormalGroupLaw builtin_law(Builtin b, int trunc, std::size_t dim_for_additive) {
    const int D = trunc;
    auto var = [&](std::size_t nv, std::size_t i) { return TruncatedSeries::variable(nv, D, i); };

    switch (b) {
        case Builtin::Additive: {
            const std::size_t m = dim_for_additive;
            if (m == 0) throw std::invalid_argument("additive law: dimension must be positive");
            std::vector<TruncatedSeries> comps;
            for (std::size_t j = 0; j < m; ++j) comps.push_back(var(2 * m, j) + var(2 * m, m + j));
            return FormalGroupLaw(std::move(comps));
        }
        case Builtin::Multiplicative: {
            TruncatedSeries g = var(2, 0) + var(2, 1) + var(2, 0) * var(2, 1);
            return FormalGroupLaw({g});
        }
        case Builtin::Heisenberg: {
            const std::size_t m = 3;
            std::vector<TruncatedSeries> comps;
            for (std::size_t j = 0; j < m; ++j) comps.push_back(var(2 * m, j) + var(2 * m, m + j));
            comps[2] = comps[2] + var(2 * m, 0) * var(2 * m, 4); // X1 * Y2
            return FormalGroupLaw(std::move(comps));
        }
        case Builtin::AxPlusB: {
            // (a, b) * (a', b') = (a + a', b + b' exp(a)), exp truncated at D
            const std::size_t m = 2;
            TruncatedSeries g1 = var(2 * m, 0) + var(2 * m, 2);
            TruncatedSeries g2 = var(2 * m, 1);
            TruncatedSeries x1_pow = TruncatedSeries::constant(2 * m, D, 1);
            for (int n = 0; n <= D; ++n) {
                if (n > 0) x1_pow = x1_pow * var(2 * m, 0);
                g2 = g2 + var(2 * m, 3) * x1_pow * Rational(Integer(1), factorial(n));
            }
            return FormalGroupLaw({g1, g2});
        }
    }
    throw std::invalid_argument("builtin_law: unknown builtin");
}

namespace {

/// embed an m-variable tuple entry into the 3m-variable (X, Y, Z) space
std::vector<std::size_t> shifted_identity(std::size_t n, std::size_t shift) {
    std::vector<std::size_t> map(n);
    std::iota(map.begin(), map.end(), shift);
    return map;
}

void report_residual(AxiomReport& report, const char* axiom, std::size_t component,
                     const TruncatedSeries& residual) {
    if (residual.is_zero()) return;
    if (std::string(axiom) == "unit")
        report.unit_ok = false;
    else
        report.assoc_ok = false;
    if (!report.first_violation) {
        const auto& [mono, coeff] = *residual.terms().begin();
        report.first_violation = AxiomViolation{axiom, component, mono, coeff};
    }
}

} // namespace

AxiomReport check_axioms(const FormalGroupLaw& g) {
    const std::size_t m = g.dim();
    const int D = g.trunc();
    AxiomReport report;

    // unit laws, residuals in m variables
    std::vector<TruncatedSeries> x_zero, zero_y;
    for (std::size_t i = 0; i < m; ++i) {
        x_zero.push_back(TruncatedSeries::variable(m, D, i));
        zero_y.push_back(TruncatedSeries(m, D));
    }
    for (std::size_t i = 0; i < m; ++i) {
        x_zero.push_back(TruncatedSeries(m, D));
        zero_y.push_back(TruncatedSeries::variable(m, D, i));
    }
    for (std::size_t j = 0; j < m; ++j) {
        TruncatedSeries xj = TruncatedSeries::variable(m, D, j);
        report_residual(report, "unit", j, substitute(g.component(j), x_zero) - xj);
        report_residual(report, "unit", j, substitute(g.component(j), zero_y) - xj);
    }

    // associativity residual in 3m variables (X, Y, Z)
    const std::size_t nv = 3 * m;
    std::vector<TruncatedSeries> inner_xy, lhs_args, rhs_args;
    for (std::size_t i = 0; i < m; ++i)
        inner_xy.push_back(reindex_vars(g.component(i), nv, shifted_identity(2 * m, 0)));
    for (std::size_t i = 0; i < m; ++i) lhs_args.push_back(inner_xy[i]);
    for (std::size_t i = 0; i < m; ++i)
        lhs_args.push_back(TruncatedSeries::variable(nv, D, 2 * m + i));
    for (std::size_t i = 0; i < m; ++i) rhs_args.push_back(TruncatedSeries::variable(nv, D, i));
    for (std::size_t i = 0; i < m; ++i)
        rhs_args.push_back(reindex_vars(g.component(i), nv, shifted_identity(2 * m, m)));

    for (std::size_t j = 0; j < m; ++j) {
        TruncatedSeries lhs = substitute(g.component(j), lhs_args);
        TruncatedSeries rhs = substitute(g.component(j), rhs_args);
        report_residual(report, "associativity", j, lhs - rhs);
    }
    return report;
}

bool is_commutative(const FormalGroupLaw& g) {
    const std::size_t m = g.dim();
    std::vector<std::size_t> swap_blocks(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        swap_blocks[i] = m + i;
        swap_blocks[m + i] = i;
    }
    for (std::size_t j = 0; j < m; ++j)
        if (reindex_vars(g.component(j), 2 * m, swap_blocks) != g.component(j)) return false;
    return true;
}

std::vector<TruncatedSeries> antipode(const FormalGroupLaw& g) {
    const std::size_t m = g.dim();
    const int D = g.trunc();

    std::vector<TruncatedSeries> s;
    for (std::size_t j = 0; j < m; ++j) s.push_back(-TruncatedSeries::variable(m, D, j));

    for (int d = 2; d <= D; ++d) {
        std::vector<TruncatedSeries> args;
        for (std::size_t i = 0; i < m; ++i) args.push_back(TruncatedSeries::variable(m, D, i));
        for (std::size_t i = 0; i < m; ++i) args.push_back(s[i]);
        // the residual G(X, s(X)) sits in filtration d; cancelling its degree-d
        // part changes higher degrees only
        for (std::size_t j = 0; j < m; ++j) {
            TruncatedSeries residual = substitute(g.component(j), args);
            s[j] = s[j] - homogeneous_part(residual, d);
        }
    }
    return s;
}

FormalGroupLaw rescale(const FormalGroupLaw& g, long p, int h) {
    if (p < 2) throw std::invalid_argument("rescale: prime must be >= 2");
    if (h < 0) throw std::invalid_argument("rescale: level must be >= 0");
    std::vector<TruncatedSeries> comps;
    for (std::size_t j = 0; j < g.dim(); ++j) {
        TruncatedSeries out(2 * g.dim(), g.trunc());
        for (const auto& [mono, c] : g.component(j).terms()) {
            // p^{-h} G(p^h X, p^h Y): a degree-d coefficient picks up p^{h(d-1)}
            int d = mono.total_degree();
            out.add_term(mono, c * Rational(int_pow(p, h * (d - 1))));
        }
        comps.push_back(std::move(out));
    }
    return FormalGroupLaw(std::move(comps));
}

bool is_homomorphism(const std::vector<TruncatedSeries>& alpha, const FormalGroupLaw& from,
                     const FormalGroupLaw& to) {
    const std::size_t m = from.dim();
    if (to.dim() != m) throw std::invalid_argument("is_homomorphism: dimension mismatch");
    if (alpha.size() != m) throw std::invalid_argument("is_homomorphism: wrong arity");
    for (const auto& a : alpha) {
        if (a.num_vars() != m) throw std::invalid_argument("is_homomorphism: component arity");
        if (a.constant_term() != 0)
            throw std::invalid_argument("is_homomorphism: nonzero constant term");
    }

    // alpha(from(X, Y)) vs to(alpha(X), alpha(Y)) in 2m variables
    std::vector<TruncatedSeries> from_comps(from.components().begin(), from.components().end());
    std::vector<TruncatedSeries> alpha_blocks;
    for (std::size_t i = 0; i < m; ++i)
        alpha_blocks.push_back(reindex_vars(alpha[i], 2 * m, shifted_identity(m, 0)));
    for (std::size_t i = 0; i < m; ++i)
        alpha_blocks.push_back(reindex_vars(alpha[i], 2 * m, shifted_identity(m, m)));

    for (std::size_t j = 0; j < m; ++j) {
        TruncatedSeries lhs = substitute(alpha[j], from_comps);
        TruncatedSeries rhs = substitute(to.component(j), alpha_blocks);
        if (lhs != rhs) return false;
    }
    return true;
}

std::string fgl_to_json(const FormalGroupLaw& g) {
    nlohmann::json out;
    out["dim"] = g.dim();
    out["trunc"] = g.trunc();
    nlohmann::json comps = nlohmann::json::array();
    for (std::size_t j = 0; j < g.dim(); ++j) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [mono, c] : g.component(j).terms())
            terms.push_back({mono.exponents(), rational_to_string(c)});
        comps.push_back(terms);
    }
    out["components"] = comps;
    return out.dump();
}

FormalGroupLaw fgl_from_json(const std::string& text) {
    nlohmann::json in;
    try {
        in = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("fgl file: ") + e.what());
    }
    if (!in.is_object() || !in.contains("dim") || !in.contains("trunc") ||
        !in.contains("components"))
        throw std::invalid_argument("fgl file: expected object with dim, trunc, components");

    const std::size_t m = in["dim"].get<std::size_t>();
    const int D = in["trunc"].get<int>();
    const auto& comps = in["components"];
    if (!comps.is_array() || comps.size() != m)
        throw std::invalid_argument("fgl file: components must be an array of length dim");

    std::vector<TruncatedSeries> out;
    for (const auto& comp : comps) {
        TruncatedSeries f(2 * m, D);
        for (const auto& term : comp) {
            if (!term.is_array() || term.size() != 2)
                throw std::invalid_argument("fgl file: term must be [exponents, coefficient]");
            std::vector<int> e = term[0].get<std::vector<int>>();
            if (e.size() != 2 * m)
                throw std::invalid_argument("fgl file: exponent vector must have length 2*dim");
            f.add_term(MultiIndex(std::move(e)), rational_from_string(term[1].get<std::string>()));
        }
        out.push_back(std::move(f));
    }
    return FormalGroupLaw(std::move(out));
}

FormalGroupLaw load_fgl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fgl file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return fgl_from_json(text);
}

void save_fgl(const FormalGroupLaw& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write fgl file: " + path);
    out << fgl_to_json(g) << "\n";
}

} // namespace fgl
