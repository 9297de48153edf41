#include "fgl/series.hpp"

#include "fgl/kernels.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fgl {

TruncatedSeries::TruncatedSeries(std::size_t num_vars, int trunc)
    : num_vars_(num_vars), trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("series: negative truncation degree");
}

TruncatedSeries TruncatedSeries::constant(std::size_t num_vars, int trunc, const Rational& c) {
    TruncatedSeries f(num_vars, trunc);
    f.add_term(MultiIndex(num_vars), c);
    return f;
}

TruncatedSeries TruncatedSeries::variable(std::size_t num_vars, int trunc, std::size_t i) {
    if (i >= num_vars) throw std::invalid_argument("series: variable index out of range");
    TruncatedSeries f(num_vars, trunc);
    f.add_term(MultiIndex::unit(num_vars, i), 1);
    return f;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t num_vars, int trunc, const MultiIndex& m,
                                          const Rational& c) {
    if (m.size() != num_vars) throw std::invalid_argument("series: monomial arity mismatch");
    TruncatedSeries f(num_vars, trunc);
    f.add_term(m, c);
    return f;
}

Rational TruncatedSeries::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const { return coeff(MultiIndex(num_vars_)); }

void TruncatedSeries::add_term(const MultiIndex& m, const Rational& c) {
    if (m.size() != num_vars_) throw std::invalid_argument("series: term arity mismatch");
    for (int e : m)
        if (e < 0) throw std::invalid_argument("series: negative exponent");
    if (c == 0 || m.total_degree() > trunc_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o, const char* op) const {
    if (num_vars_ != o.num_vars_)
        throw std::invalid_argument(std::string(op) + ": variable count mismatch");
    if (trunc_ != o.trunc_)
        throw std::invalid_argument(std::string(op) + ": truncation degree mismatch");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    require_compatible(o, "series add");
    TruncatedSeries out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    require_compatible(o, "series sub");
    TruncatedSeries out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(num_vars_, trunc_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    require_compatible(o, "series mul");
    TruncatedSeries out(num_vars_, trunc_);
    out.terms_ = kernels::mul_terms(terms_, o.terms_, trunc_);
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    TruncatedSeries out(num_vars_, trunc_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return num_vars_ == o.num_vars_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

int filtration_degree(const TruncatedSeries& f) {
    if (f.is_zero()) return kFiltrationInfinity;
    // graded-lex order: the first stored term has minimal total degree
    return f.terms().begin()->first.total_degree();
}

TruncatedSeries substitute(const TruncatedSeries& f, const std::vector<TruncatedSeries>& subs) {
    if (subs.size() != f.num_vars())
        throw std::invalid_argument("substitute: wrong number of substitutions");
    if (subs.empty()) throw std::invalid_argument("substitute: no variables to substitute");

    const std::size_t nv = subs[0].num_vars();
    const int D = subs[0].trunc();
    for (const auto& s : subs) {
        if (s.num_vars() != nv || s.trunc() != D)
            throw std::invalid_argument("substitute: substitutions live in different spaces");
        if (s.constant_term() != 0)
            throw std::invalid_argument("substitute: substitution has nonzero constant term");
    }

    // lazily extended power cache per variable
    std::vector<std::vector<TruncatedSeries>> pow(f.num_vars());
    auto power = [&](std::size_t i, int e) -> const TruncatedSeries& {
        auto& pw = pow[i];
        if (pw.empty()) pw.push_back(TruncatedSeries::constant(nv, D, 1));
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * subs[i]);
        return pw[static_cast<std::size_t>(e)];
    };

    TruncatedSeries out(nv, D);
    for (const auto& [m, c] : f.terms()) {
        // substitutions lie in filtration 1, so this term's image sits in
        // filtration >= total_degree and vanishes past the cutoff
        if (m.total_degree() > D) continue;
        TruncatedSeries prod = TruncatedSeries::constant(nv, D, c);
        for (std::size_t i = 0; i < f.num_vars(); ++i)
            if (m[i] > 0) prod = prod * power(i, m[i]);
        out = out + prod;
    }
    return out;
}

TruncatedSeries partial_derivative(const TruncatedSeries& f, std::size_t var) {
    if (var >= f.num_vars()) throw std::invalid_argument("partial_derivative: bad variable");
    TruncatedSeries out(f.num_vars(), f.trunc());
    for (const auto& [m, c] : f.terms()) {
        if (m[var] == 0) continue;
        MultiIndex d = m;
        d[var] -= 1;
        out.add_term(d, c * m[var]);
    }
    return out;
}

TruncatedSeries reindex_vars(const TruncatedSeries& f, std::size_t new_num_vars,
                             const std::vector<std::size_t>& var_map) {
    if (var_map.size() != f.num_vars())
        throw std::invalid_argument("reindex_vars: map arity mismatch");
    TruncatedSeries out(new_num_vars, f.trunc());
    for (const auto& [m, c] : f.terms()) {
        MultiIndex nm(new_num_vars);
        for (std::size_t i = 0; i < f.num_vars(); ++i) {
            if (m[i] == 0) continue;
            if (var_map[i] >= new_num_vars)
                throw std::invalid_argument("reindex_vars: target variable out of range");
            nm[var_map[i]] += m[i];
        }
        out.add_term(nm, c);
    }
    return out;
}

TruncatedSeries homogeneous_part(const TruncatedSeries& f, int d) {
    TruncatedSeries out(f.num_vars(), f.trunc());
    for (const auto& [m, c] : f.terms())
        if (m.total_degree() == d) out.add_term(m, c);
    return out;
}

TruncatedSeries truncate_to(const TruncatedSeries& f, int new_trunc) {
    TruncatedSeries out(f.num_vars(), new_trunc);
    for (const auto& [m, c] : f.terms()) out.add_term(m, c);
    return out;
}

namespace {
std::string var_name(std::size_t num_vars, std::size_t i) {
    return num_vars == 1 ? "t" : "t" + std::to_string(i + 1);
}
} // namespace

std::string to_text(const TruncatedSeries& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
            first = false;
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        out += rational_to_string(a);
        std::string vars;
        for (std::size_t i = 0; i < f.num_vars(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += " ";
            vars += var_name(f.num_vars(), i);
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (!vars.empty()) {
            out += "*";
            out += vars;
        }
    }
    return out;
}

namespace {

class TextScanner {
public:
    TextScanner(const std::string& s, std::size_t num_vars, int trunc)
        : s_(s), num_vars_(num_vars), trunc_(trunc) {}

    TruncatedSeries parse() {
        TruncatedSeries out(num_vars_, trunc_);
        skip_ws();
        if (done()) fail("empty series text");
        if (s_ == "0") return out;

        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        while (true) {
            parse_term(out, negative);
            skip_ws();
            if (done()) break;
            char c = peek();
            if (c == '+')
                negative = false;
            else if (c == '-')
                negative = true;
            else
                fail("expected '+' or '-'");
            ++pos_;
        }
        return out;
    }

private:
    const std::string& s_;
    std::size_t num_vars_;
    int trunc_;
    std::size_t pos_ = 0;

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("series parse error at position " + std::to_string(pos_) +
                                    ": " + msg);
    }

    std::string read_digits() {
        std::string d;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            d += peek();
            ++pos_;
        }
        if (d.empty()) fail("expected digits");
        return d;
    }

    void parse_term(TruncatedSeries& out, bool negative) {
        skip_ws();
        if (done()) fail("expected a term");
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a coefficient");
        std::string num = read_digits();
        std::string coeff_text = num;
        if (!done() && peek() == '/') {
            ++pos_;
            coeff_text += "/" + read_digits();
        }
        Rational c = rational_from_string(coeff_text);
        if (negative) c = -c;

        MultiIndex m(num_vars_);
        skip_ws();
        if (!done() && peek() == '*') {
            ++pos_;
            bool saw_var = false;
            while (true) {
                skip_ws();
                if (done() || peek() != 't') break;
                ++pos_;
                std::size_t idx = 0;
                if (num_vars_ == 1) {
                    if (!done() && std::isdigit(static_cast<unsigned char>(peek())))
                        fail("single-variable series uses plain 't'");
                } else {
                    std::string d = read_digits();
                    unsigned long v = std::stoul(d);
                    if (v < 1 || v > num_vars_) fail("variable index out of range");
                    idx = v - 1;
                }
                int e = 1;
                if (!done() && peek() == '^') {
                    ++pos_;
                    e = std::stoi(read_digits());
                }
                m[idx] += e;
                saw_var = true;
            }
            if (!saw_var) fail("expected variables after '*'");
        }
        out.add_term(m, c);
    }
};

} // namespace

TruncatedSeries series_from_text(const std::string& text, std::size_t num_vars, int trunc) {
    return TextScanner(text, num_vars, trunc).parse();
}

} // namespace fgl
