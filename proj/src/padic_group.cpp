#include "fgl/padic_group.hpp"

#include "fgl/hopf.hpp"

#include <json.hpp>

#include <algorithm>

namespace fgl {

GroupPoint::GroupPoint(std::vector<PadicScalar> c, int h) : coords(std::move(c)), level(h) {
    if (coords.empty()) throw std::invalid_argument("a group point needs at least one coordinate");
    if (h < 0) throw std::invalid_argument("level must be non-negative");
    for (const PadicScalar& z : coords) {
        if (z.prime() != coords.front().prime() || z.precision() != coords.front().precision())
            throw std::invalid_argument("coordinates must share prime and precision");
        const auto v = z.val();
        if (v && *v < h + 1)
            throw std::invalid_argument("coordinate valuation " + std::to_string(*v) +
                                        " is below level " + std::to_string(h));
    }
}

bool GroupPoint::operator==(const GroupPoint& o) const {
    return level == o.level && coords == o.coords;
}

GroupPoint group_identity(std::size_t m, long p, int precision, int h) {
    return GroupPoint(std::vector<PadicScalar>(m, PadicScalar(p, precision, 0)), h);
}

PadicScalar eval_series(const TruncatedSeries& f, const std::vector<PadicScalar>& point) {
    if (point.size() != f.num_vars())
        throw std::invalid_argument("evaluation point has the wrong arity");
    if (point.empty()) throw std::invalid_argument("cannot evaluate without a prime context");
    const long p = point.front().prime();
    const int N = point.front().precision();

    // per-variable power tables, filled on demand
    std::vector<std::vector<PadicScalar>> pows(point.size(), {PadicScalar(p, N, 1)});
    const auto power = [&](std::size_t v, int e) -> const PadicScalar& {
        auto& table = pows[v];
        while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * point[v]);
        return table[static_cast<std::size_t>(e)];
    };

    PadicScalar acc(p, N, 0);
    for (const auto& [mono, c] : f.terms()) {
        PadicScalar term = PadicScalar::from_rational(p, N, c);
        for (std::size_t v = 0; v < point.size(); ++v)
            if (mono[v] > 0) term = term * power(v, mono[v]);
        acc = acc + term;
    }
    return acc;
}

namespace {

void require_tail_below_precision(const FormalGroupLaw& g, int level, int precision) {
    const long tail = static_cast<long>(g.trunc() + 1) * (level + 1);
    if (tail < precision)
        throw CertificationError(
            "discarded tail has valuation >= " + std::to_string(tail) + " < precision " +
            std::to_string(precision) + "; raise the truncation degree or lower the precision");
}

std::vector<PadicScalar> eval_tuple(const std::vector<TruncatedSeries>& comps,
                                    const std::vector<PadicScalar>& args) {
    std::vector<PadicScalar> out;
    out.reserve(comps.size());
    for (const TruncatedSeries& f : comps) out.push_back(eval_series(f, args));
    return out;
}

} // namespace

GroupPoint group_mul(const FormalGroupLaw& g, const GroupPoint& x, const GroupPoint& y) {
    if (x.coords.size() != g.dim() || y.coords.size() != g.dim())
        throw std::invalid_argument("group_mul: dimension mismatch");
    if (x.prime() != y.prime()) throw std::invalid_argument("group_mul: prime mismatch");
    const int level = std::min(x.level, y.level);
    const int N = std::min(x.precision(), y.precision());
    require_tail_below_precision(g, level, N);

    std::vector<PadicScalar> args = x.coords;
    args.insert(args.end(), y.coords.begin(), y.coords.end());
    return GroupPoint(eval_tuple(g.components(), args), level);
}

GroupPoint group_inv(const FormalGroupLaw& g, const GroupPoint& x) {
    if (x.coords.size() != g.dim()) throw std::invalid_argument("group_inv: dimension mismatch");
    require_tail_below_precision(g, x.level, x.precision());

    const GroupPoint inv(eval_tuple(antipode(g), x.coords), x.level);
    const GroupPoint check = group_mul(g, x, inv);
    for (const PadicScalar& z : check.coords)
        if (!z.is_zero())
            throw CertificationError("inverse verification left a nonzero residue");
    return inv;
}

namespace {

/// digit-by-digit uniform residue with valuation >= shift, reduced mod p^N
PadicScalar sample_scalar(Rng& rng, long p, int precision, int shift) {
    Integer acc = 0;
    Integer scale = 1;
    for (int i = 0; i + shift < precision; ++i) {
        acc += scale * static_cast<unsigned long>(rng.below(static_cast<std::uint64_t>(p)));
        scale *= p;
    }
    return PadicScalar(p, precision, acc * int_pow(p, shift));
}

std::vector<std::string> residue_strings(const GroupPoint& z) {
    std::vector<std::string> out;
    out.reserve(z.coords.size());
    for (const PadicScalar& c : z.coords) out.push_back(c.residue().get_str());
    return out;
}

} // namespace

NormalityReport normality_check(const FormalGroupLaw& g, long p, int precision, int h,
                                int samples, std::uint64_t seed) {
    if (h < 1) throw std::invalid_argument("normality_check: level must be at least 1");
    NormalityReport r;
    r.p = p;
    r.precision = precision;
    r.h = h;
    r.trunc = g.trunc();
    r.seed = seed;
    r.samples = samples;

    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<PadicScalar> xc, yc;
        for (std::size_t v = 0; v < g.dim(); ++v) xc.push_back(sample_scalar(rng, p, precision, 1));
        for (std::size_t v = 0; v < g.dim(); ++v)
            yc.push_back(sample_scalar(rng, p, precision, h + 1));
        const GroupPoint x(xc, 0);
        const GroupPoint y(std::move(yc), h);

        const GroupPoint conj = group_mul(g, group_mul(g, x, y), group_inv(g, x));

        NormalitySample sample;
        sample.x = residue_strings(x);
        sample.y = residue_strings(y);
        sample.conjugate = residue_strings(conj);
        sample.ok = true;
        for (const PadicScalar& z : conj.coords) {
            const auto v = z.val();
            sample.valuations.push_back(v);
            if (v && *v < h + 1) sample.ok = false;
        }
        if (!sample.ok) r.passed = false;
        r.details.push_back(std::move(sample));
    }
    return r;
}

std::string normality_report_json(const NormalityReport& r) {
    nlohmann::json j;
    j["fgl"] = r.law;
    j["p"] = r.p;
    j["N"] = r.precision;
    j["h"] = r.h;
    j["D"] = r.trunc;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["passed"] = r.passed;
    nlohmann::json details = nlohmann::json::array();
    for (const NormalitySample& s : r.details) {
        nlohmann::json d;
        d["x"] = s.x;
        d["y"] = s.y;
        d["conjugate"] = s.conjugate;
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : s.valuations) {
            if (v)
                vals.push_back(*v);
            else
                vals.push_back("inf");
        }
        d["valuations"] = vals;
        d["ok"] = s.ok;
        details.push_back(d);
    }
    j["details"] = details;
    return j.dump(2) + "\n";
}

ConvergenceReport convergence_check(const TruncatedSeries& f, long p, int h,
                                    const std::vector<int>& levels) {
    const ModifiedRingReport membership = modified_ring_check(f, p);
    if (!membership.member)
        throw CertificationError("coefficient family fails the integrality condition at p = " +
                                 std::to_string(p));

    ConvergenceReport r;
    r.p = p;
    r.h = h;
    r.threshold = Rational(h) + Rational(1, static_cast<long>(p - 1));

    bool all_integral = true;
    for (const auto& [j, c] : f.terms())
        if (valuation(c, p) < 0) all_integral = false;

    for (const int k : levels) {
        LevelVerdict v;
        v.level = k;
        // one-sided certificate from the valuation estimates
        v.certified = Rational(k) > r.threshold || (all_integral && k > h);

        std::map<int, int> best;
        for (const auto& [j, c] : f.terms()) {
            const int d = j.total_degree();
            if (d == 0) continue;
            const int tval = valuation(c, p) + d * (k - h);
            auto [it, inserted] = best.emplace(d, tval);
            if (!inserted) it->second = std::min(it->second, tval);
        }
        v.trace.assign(best.begin(), best.end());
        r.verdicts.push_back(std::move(v));
    }
    return r;
}

std::string convergence_report_json(const ConvergenceReport& r) {
    nlohmann::json j;
    j["p"] = r.p;
    j["h"] = r.h;
    j["threshold"] = rational_to_string(r.threshold);
    nlohmann::json verdicts = nlohmann::json::array();
    for (const LevelVerdict& v : r.verdicts) {
        nlohmann::json jv;
        jv["level"] = v.level;
        jv["verdict"] = v.certified ? "converges_certified" : "no_certificate";
        nlohmann::json trace = nlohmann::json::array();
        for (const auto& [d, tv] : v.trace) trace.push_back({{"degree", d}, {"min_valuation", tv}});
        jv["trace"] = trace;
        verdicts.push_back(jv);
    }
    j["verdicts"] = verdicts;
    return j.dump(2) + "\n";
}

} // namespace fgl
