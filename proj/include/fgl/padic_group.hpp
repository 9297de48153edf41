#pragma once

#include "fgl/formal_group.hpp"
#include "fgl/padic.hpp"
#include "fgl/rng.hpp"
#include "fgl/series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fgl {

/**
 * Point of the level-h standard group: m coordinates in the valuation ring,
 * each of valuation >= h+1.  The constructor verifies membership.
 */
struct GroupPoint {
    std::vector<PadicScalar> coords;
    int level;

    GroupPoint(std::vector<PadicScalar> c, int h);

    long prime() const { return coords.front().prime(); }
    int precision() const { return coords.front().precision(); }
    bool operator==(const GroupPoint& o) const;
};

/// the m-tuple of zeros at level h
GroupPoint group_identity(std::size_t m, long p, int precision, int h);

/**
 * Evaluate a truncated series at a tuple of scalars, exactly mod p^N.  Every
 * coefficient must be integral at p (from_rational refuses otherwise).
 */
PadicScalar eval_series(const TruncatedSeries& f, const std::vector<PadicScalar>& point);

/**
 * Group multiplication by evaluating the law's components.  Refuses unless
 * the discarded tail is provably below the working precision:
 * (trunc+1) * (min level + 1) >= N.  The result lives at the smaller level.
 */
GroupPoint group_mul(const FormalGroupLaw& g, const GroupPoint& x, const GroupPoint& y);

/**
 * Inverse by evaluating the antipode series, then verifying
 * x * inv(x) == identity at the working precision.
 */
GroupPoint group_inv(const FormalGroupLaw& g, const GroupPoint& x);

struct NormalitySample {
    std::vector<std::string> x;         // sampled outer point, residue strings
    std::vector<std::string> y;         // sampled inner point
    std::vector<std::string> conjugate; // x y x^{-1}
    std::vector<std::optional<int>> valuations;
    bool ok = false; // every valuation >= h+1
};

struct NormalityReport {
    std::string law;
    long p = 0;
    int precision = 0;
    int h = 0;
    int trunc = 0;
    std::uint64_t seed = 0;
    int samples = 0;
    bool passed = true;
    std::vector<NormalitySample> details;
};

/**
 * Conjugation stability of the level-h subgroup inside the level-0 group:
 * for seeded random x at level 0 and y at level h, every coordinate of
 * x y x^{-1} must again have valuation >= h+1.
 */
NormalityReport normality_check(const FormalGroupLaw& g, long p, int precision, int h,
                                int samples, std::uint64_t seed);

std::string normality_report_json(const NormalityReport& r);

struct LevelVerdict {
    int level = 0;
    bool certified = false;
    // per degree with stored terms: min over that degree of
    // v_p(coefficient) + degree * (level - h)
    std::vector<std::pair<int, int>> trace;
};

struct ConvergenceReport {
    long p = 0;
    int h = 0;
    Rational threshold; // h + 1/(p-1)
    std::vector<LevelVerdict> verdicts;
};

/**
 * Certified-convergence report for a function on the level-h group,
 * evaluated on points of level k for each requested k.  Certification is by
 * the valuation estimate: membership of the coefficient family (checked on
 * entry, refusal on failure) gives v_p(b) > -|j|/(p-1), so the term
 * valuations grow whenever k exceeds the threshold h + 1/(p-1); integral
 * coefficient families certify already for k > h.  The trace records the
 * per-degree minimum of v_p(b) + |j|*(k-h) as finite-stage evidence; a
 * bounded trace is reported, never silently accepted.
 */
ConvergenceReport convergence_check(const TruncatedSeries& f, long p, int h,
                                    const std::vector<int>& levels);

std::string convergence_report_json(const ConvergenceReport& r);

} // namespace fgl
