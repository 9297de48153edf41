// Command-line front end: law checks, antipodes, Lie data, cohomology, the
// comparison morphism, and the p-adic group reports.  Every subcommand prints
// a line-oriented summary to stdout and writes a machine-readable JSON record
// to --output (default: $FGL_OUTPUT_DIR/<command>.json, else ./<command>.json).
// Exit codes: 0 pass, 1 property violation or refused certification, 2 usage
// or parse error.
#include <CLI11.hpp>
#include <json.hpp>

#include "fgl/complexes.hpp"
#include "fgl/dual_u.hpp"
#include "fgl/formal_group.hpp"
#include "fgl/hopf.hpp"
#include "fgl/lie.hpp"
#include "fgl/padic.hpp"
#include "fgl/padic_group.hpp"
#include "fgl/series.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

using namespace fgl;

namespace {

struct LawSource {
    std::string builtin;
    std::string file;
    std::size_t dim = 1; // additive family only
    int trunc = 6;

    FormalGroupLaw load() const {
        if (!file.empty()) return load_fgl(file);
        const auto b = builtin_from_name(builtin);
        if (!b) throw std::invalid_argument("unknown builtin law: " + builtin);
        return builtin_law(*b, trunc, dim);
    }

    std::string name() const { return file.empty() ? builtin : file; }
};

void add_law_options(CLI::App* cmd, LawSource& src) {
    auto* b = cmd->add_option("--builtin", src.builtin,
                              "stock law: additive, multiplicative, heisenberg, ax_plus_b");
    auto* f = cmd->add_option("--file", src.file, "load the law from a JSON .fgl file");
    cmd->add_option("--dim", src.dim, "dimension of the additive family")->check(CLI::Range(1, 8));
    cmd->add_option("--trunc", src.trunc, "truncation degree")->check(CLI::Range(2, 16));
    b->excludes(f);
    f->excludes(b);
}

std::string output_path(const std::string& flag_value, const std::string& filename) {
    if (!flag_value.empty()) return flag_value;
    const char* dir = std::getenv("FGL_OUTPUT_DIR");
    if (dir != nullptr && *dir != '\0') return std::string(dir) + "/" + filename;
    return filename;
}

void write_report(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report: " + path);
    out << text;
    if (!out.flush()) throw std::runtime_error("short write: " + path);
    std::printf("report written to %s\n", path.c_str());
}

std::string monomial_text(const MultiIndex& m, std::size_t num_vars, const Rational& c) {
    return to_text(TruncatedSeries::monomial(num_vars, m.total_degree(), m, c));
}

int cmd_check(const LawSource& src, const std::string& out_flag) {
    const FormalGroupLaw g = src.load();
    const AxiomReport r = check_axioms(g);
    const bool comm = is_commutative(g);
    std::printf("law: %s (dim %zu, trunc %d)\n", src.name().c_str(), g.dim(), g.trunc());
    std::printf("unit axiom: %s\n", r.unit_ok ? "ok" : "FAIL");
    std::printf("associativity: %s\n", r.assoc_ok ? "ok" : "FAIL");
    std::printf("commutative: %s\n", comm ? "yes" : "no");

    nlohmann::json j;
    j["law"] = src.name();
    j["dim"] = g.dim();
    j["trunc"] = g.trunc();
    j["unit_ok"] = r.unit_ok;
    j["assoc_ok"] = r.assoc_ok;
    j["commutative"] = comm;
    if (r.first_violation) {
        const AxiomViolation& v = *r.first_violation;
        const std::string term = monomial_text(v.monomial, 3 * g.dim(), v.coefficient);
        std::printf("residual term in component %zu: %s\n", v.component + 1, term.c_str());
        nlohmann::json jv;
        jv["axiom"] = v.axiom;
        jv["component"] = v.component + 1;
        jv["term"] = term;
        j["violation"] = jv;
    }
    write_report(output_path(out_flag, "check.json"), j.dump(2) + "\n");
    return r.ok() ? 0 : 1;
}

int cmd_antipode(const LawSource& src, const std::string& out_flag) {
    const FormalGroupLaw g = src.load();
    const std::vector<TruncatedSeries> s = antipode(g);
    nlohmann::json comps = nlohmann::json::array();
    for (std::size_t j = 0; j < s.size(); ++j) {
        const std::string text = to_text(s[j]);
        if (s.size() == 1)
            std::printf("%s\n", text.c_str());
        else
            std::printf("component %zu: %s\n", j + 1, text.c_str());
        comps.push_back(text);
    }
    nlohmann::json j;
    j["law"] = src.name();
    j["trunc"] = g.trunc();
    j["components"] = comps;
    write_report(output_path(out_flag, "antipode.json"), j.dump(2) + "\n");
    return 0;
}

int cmd_lie(const LawSource& src, const std::string& out_flag) {
    const FormalGroupLaw g = src.load();
    const LieAlgebra L = lie_from_fgl(g);
    const std::string text = lie_to_text(L);
    if (text.empty())
        std::printf("abelian (no nonzero brackets)\n");
    else
        std::fputs(text.c_str(), stdout);

    nlohmann::json brackets = nlohmann::json::array();
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t k = i + 1; k < L.dim(); ++k)
            for (std::size_t l = 0; l < L.dim(); ++l)
                if (L.bracket_coeff(i, k, l) != 0)
                    brackets.push_back({i + 1, k + 1, l + 1,
                                        rational_to_string(L.bracket_coeff(i, k, l))});
    nlohmann::json j;
    j["law"] = src.name();
    j["dim"] = L.dim();
    j["brackets"] = brackets;
    write_report(output_path(out_flag, "lie.json"), j.dump(2) + "\n");
    return 0;
}

int cmd_cohomology(const LawSource& src, const std::string& out_flag) {
    const FormalGroupLaw g = src.load();
    const std::vector<std::size_t> betti = ce_cohomology(lie_from_fgl(g));
    std::string line = "betti:";
    for (const std::size_t b : betti) line += " " + std::to_string(b);
    std::printf("%s\n", line.c_str());

    nlohmann::json j;
    j["law"] = src.name();
    j["dim"] = g.dim();
    j["betti"] = betti;
    write_report(output_path(out_flag, "cohomology.json"), j.dump(2) + "\n");
    return 0;
}

int cmd_phi(const LawSource& src, int max_degree, const std::string& out_flag) {
    const FormalGroupLaw g = src.load();
    const std::size_t m = g.dim();
    const int top = std::min<int>(max_degree, static_cast<int>(m));
    bool all_ok = true;
    nlohmann::json witnesses = nlohmann::json::array();
    for (int n = 1; n <= top; ++n) {
        for (const WedgeTuple& t : wedge_tuples(m, n)) {
            MultiIndex mono(m * static_cast<std::size_t>(n));
            for (int b = 0; b < n; ++b)
                mono[static_cast<std::size_t>(b) * m +
                     static_cast<std::size_t>(t[static_cast<std::size_t>(b)])] = 1;
            const CobarCochain c(
                m, n,
                TruncatedSeries::monomial(m * static_cast<std::size_t>(n), g.trunc(), mono, 1));
            const CECochain full = phi_full(g, c);
            const CECochain closed = phi_explicit(c);
            const bool ok = full == closed && full.coeff(t) == 1 && full.values().size() == 1;
            all_ok = all_ok && ok;
            const std::string body = to_text(c.body);
            std::printf("%s  ->  %s%s\n", body.c_str(), to_text(full).c_str(),
                        ok ? "" : "  MISMATCH");
            nlohmann::json w;
            w["degree"] = n;
            w["body"] = body;
            w["image"] = to_text(full);
            w["ok"] = ok;
            witnesses.push_back(w);
        }
    }
    std::printf("comparison morphism witnesses: %s\n", all_ok ? "all agree" : "MISMATCH");
    nlohmann::json j;
    j["law"] = src.name();
    j["max_degree"] = top;
    j["passed"] = all_ok;
    j["witnesses"] = witnesses;
    write_report(output_path(out_flag, "phi.json"), j.dump(2) + "\n");
    return all_ok ? 0 : 1;
}

int cmd_chainmap(const LawSource& src, int n, int trials, std::uint64_t seed,
                 const std::string& out_flag) {
    const FormalGroupLaw g = src.load();
    ChainMapReport r = chain_map_check(g, n, trials, seed);
    r.law = src.name();
    std::printf("chain map at degree %d: %s (%d trials, seed %llu)\n", n,
                r.passed ? "pass" : "FAIL", trials, static_cast<unsigned long long>(seed));
    if (!r.passed) std::printf("counterexample body: %s\n", r.counterexample.c_str());
    write_report(output_path(out_flag, "chainmap.json"), chain_map_report_json(r));
    return r.passed ? 0 : 1;
}

int cmd_tals_graded(const LawSource& src, int max_degree, const std::string& out_flag) {
    LawSource adjusted = src;
    adjusted.trunc = std::max(src.trunc, max_degree);
    const FormalGroupLaw g = adjusted.load();
    const std::size_t m = g.dim();
    bool all_ok = true;
    int checked = 0;
    for (int k = 1; k <= max_degree; ++k) {
        bool degree_ok = true;
        int count = 0;
        for (const MultiIndex& j : indices_of_degree(m, k)) {
            const DualUElement a = tals(g, TruncatedSeries::monomial(m, g.trunc(), j, 1));
            bool ok = a.coeff(j) == Rational(j.index_factorial());
            for (const auto& [idx, c] : a.terms()) {
                if (idx.total_degree() < k) ok = false;
                if (idx.total_degree() == k && idx != j && c != 0) ok = false;
            }
            degree_ok = degree_ok && ok;
            ++count;
            ++checked;
        }
        std::printf("degree %d: %d indices, diagonal factors %s\n", k, count,
                    degree_ok ? "ok" : "MISMATCH");
        all_ok = all_ok && degree_ok;
    }
    nlohmann::json j;
    j["law"] = src.name();
    j["max_degree"] = max_degree;
    j["indices_checked"] = checked;
    j["passed"] = all_ok;
    write_report(output_path(out_flag, "tals_graded.json"), j.dump(2) + "\n");
    return all_ok ? 0 : 1;
}

int cmd_normality(const LawSource& src, long prime, int precision, int level, int samples,
                  std::uint64_t seed, const std::string& out_flag) {
    const FormalGroupLaw g = src.load();
    NormalityReport r = normality_check(g, prime, precision, level, samples, seed);
    r.law = src.name();
    int ok_count = 0;
    for (const NormalitySample& s : r.details) ok_count += s.ok ? 1 : 0;
    std::printf("normality at level %d: %d/%d conjugates stayed (p=%ld, N=%d)\n", level, ok_count,
                samples, prime, precision);
    write_report(output_path(out_flag, "normality.json"), normality_report_json(r));
    return r.passed ? 0 : 1;
}

int cmd_convergence(long prime, int level, int trunc, std::vector<int> levels,
                    const std::string& out_flag) {
    // canonical test function: the truncated exponential, the boundary case
    TruncatedSeries f(1, trunc);
    Rational c = 1;
    for (int n = 1; n <= trunc; ++n) {
        c /= n;
        f.add_term(MultiIndex{n}, c);
    }
    const ConvergenceReport r = convergence_check(f, prime, level, levels);
    std::printf("threshold: %s\n", rational_to_string(r.threshold).c_str());
    bool all_certified = true;
    for (const LevelVerdict& v : r.verdicts) {
        std::printf("level %d: %s\n", v.level,
                    v.certified ? "converges_certified" : "no_certificate");
        all_certified = all_certified && v.certified;
    }
    write_report(output_path(out_flag, "convergence.json"), convergence_report_json(r));
    return all_certified ? 0 : 1;
}

int cmd_emit(const LawSource& src, const std::string& out_flag) {
    const FormalGroupLaw g = src.load();
    const std::string path = output_path(out_flag, src.name() + ".fgl");
    save_fgl(g, path);
    std::printf("law written to %s\n", path.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact formal group laws: checks, dual morphisms, p-adic standard groups"};
    app.require_subcommand(1);

    LawSource src;
    std::string out_flag;
    int degree = 1;
    int trials = 25;
    std::uint64_t seed = 7;
    int max_degree = 6;
    long prime = 3;
    int precision = 12;
    int level = 1;
    std::vector<int> levels;

    auto* check = app.add_subcommand("check", "verify the group-law axioms");
    add_law_options(check, src);
    check->add_option("--output", out_flag, "report path");

    auto* anti = app.add_subcommand("antipode", "print the inverse series");
    add_law_options(anti, src);
    anti->add_option("--output", out_flag, "report path");

    auto* lie = app.add_subcommand("lie", "print the Lie algebra of the law");
    add_law_options(lie, src);
    lie->add_option("--output", out_flag, "report path");

    auto* coh = app.add_subcommand("cohomology", "Betti numbers of the Lie algebra");
    add_law_options(coh, src);
    coh->add_option("--output", out_flag, "report path");

    auto* phi = app.add_subcommand("phi", "comparison-morphism witnesses for every basis form");
    add_law_options(phi, src);
    phi->add_option("--n", max_degree, "top form degree to witness")->check(CLI::Range(1, 6));
    phi->add_option("--output", out_flag, "report path");

    auto* cm = app.add_subcommand("chainmap", "seeded chain-map property check");
    add_law_options(cm, src);
    cm->add_option("--n", degree, "cochain degree")->check(CLI::Range(1, 3));
    cm->add_option("--trials", trials, "number of random cochains")->check(CLI::Range(1, 1000));
    cm->add_option("--seed", seed, "random seed");
    cm->add_option("--output", out_flag, "report path");

    auto* tg = app.add_subcommand("tals-graded", "diagonal factors of the dual morphism");
    add_law_options(tg, src);
    tg->add_option("--max-degree", max_degree, "largest total degree to check")
        ->check(CLI::Range(1, 8));
    tg->add_option("--output", out_flag, "report path");

    auto* norm = app.add_subcommand("normality", "conjugation stability of the level subgroup");
    add_law_options(norm, src);
    norm->add_option("--prime", prime, "prime p");
    norm->add_option("--precision", precision, "working precision N (mod p^N)")
        ->check(CLI::Range(1, 64));
    norm->add_option("--level", level, "subgroup level h >= 1")->check(CLI::Range(1, 16));
    norm->add_option("--trials", trials, "number of sampled conjugations")
        ->check(CLI::Range(1, 1000));
    norm->add_option("--seed", seed, "random seed");
    norm->add_option("--output", out_flag, "report path");

    auto* conv = app.add_subcommand("convergence",
                                    "certified-convergence verdicts for the truncated exponential");
    conv->add_option("--prime", prime, "prime p");
    conv->add_option("--level", level, "level h of the function's group");
    conv->add_option("--trunc", src.trunc, "truncation degree of the exponential")
        ->check(CLI::Range(2, 16));
    conv->add_option("--levels", levels, "evaluation levels k to test")->expected(-1);
    conv->add_option("--output", out_flag, "report path");

    auto* emit = app.add_subcommand("emit", "write a stock law to a JSON .fgl file");
    add_law_options(emit, src);
    emit->add_option("--output", out_flag, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (src.builtin.empty() && src.file.empty()) src.builtin = "multiplicative";
    if (levels.empty()) levels = {1, 2};
    // per-subcommand defaults for the shared flags
    if (*norm) {
        if (norm->count("--trunc") == 0) src.trunc = 11;
        if (norm->count("--trials") == 0) trials = 5;
        if (norm->count("--seed") == 0) seed = 11;
    }
    if (*conv) {
        if (conv->count("--prime") == 0) prime = 2;
        if (conv->count("--level") == 0) level = 0;
        if (conv->count("--trunc") == 0) src.trunc = 8;
    }

    try {
        if (*check) return cmd_check(src, out_flag);
        if (*anti) return cmd_antipode(src, out_flag);
        if (*lie) return cmd_lie(src, out_flag);
        if (*coh) return cmd_cohomology(src, out_flag);
        if (*phi) return cmd_phi(src, max_degree, out_flag);
        if (*cm) return cmd_chainmap(src, degree, trials, seed, out_flag);
        if (*tg) return cmd_tals_graded(src, max_degree, out_flag);
        if (*norm) return cmd_normality(src, prime, precision, level, trials, seed, out_flag);
        if (*conv) return cmd_convergence(prime, level, src.trunc, levels, out_flag);
        if (*emit) return cmd_emit(src, out_flag);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
