#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgl/complexes.hpp"
#include "fgl/dual_u.hpp"
#include "fgl/formal_group.hpp"
#include "fgl/hopf.hpp"
#include "fgl/lie.hpp"
#include "fgl/rational.hpp"
#include "fgl/rng.hpp"
#include "fgl/series.hpp"

using namespace fgl;

namespace {

TruncatedSeries random_series(std::size_t nv, int D, Rng& rng) {
    TruncatedSeries f(nv, D);
    for (int t = 0; t < 5; ++t) {
        const int d = static_cast<int>(rng.below(static_cast<std::uint64_t>(D + 1)));
        MultiIndex m(nv);
        for (int q = 0; q < d; ++q) m[static_cast<std::size_t>(rng.below(nv))] += 1;
        f.add_term(m, ratio(static_cast<long>(rng.range(-5, 5)), 1 + static_cast<long>(rng.below(4))));
    }
    return f;
}

} // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(rational_to_string(Rational(1, 2)) == "1/2");
    CHECK(rational_to_string(Rational(-7)) == "-7");
    CHECK(rational_from_string("3/6") == Rational(1, 2));
    CHECK(rational_from_string("-4/2") == Rational(-2));
    CHECK(rational_from_string("0") == 0);
    CHECK_THROWS_AS(rational_from_string("1/"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);

    CHECK(valuation(Integer(12), 2) == 2);
    CHECK(valuation(Rational(50, 27), 3) == -3);
    CHECK(valuation(Rational(50, 27), 5) == 2);
}

TEST_CASE("series text: frozen strings") {
    const FormalGroupLaw mult = builtin_law(Builtin::Multiplicative, 5);
    CHECK(to_text(antipode(mult)[0]) == "-1*t + 1*t^2 - 1*t^3 + 1*t^4 - 1*t^5");

    const FormalGroupLaw h = builtin_law(Builtin::Heisenberg, 4);
    CHECK(to_text(h.component(2)) == "1*t6 + 1*t3 + 1*t1 t5");
    CHECK(to_text(antipode(h)[2]) == "-1*t3 + 1*t1 t2");

    CHECK(to_text(TruncatedSeries(2, 3)) == "0");

    TruncatedSeries c = TruncatedSeries::constant(1, 3, Rational(5, 3));
    c.add_term(MultiIndex{1}, 1);
    CHECK(to_text(c) == "5/3 + 1*t");
}

TEST_CASE("series text round trips") {
    const char* frozen[] = {"-1*t + 1*t^2 - 1*t^3 + 1*t^4 - 1*t^5", "0", "5/3 + 1*t"};
    for (const char* s : frozen) {
        const TruncatedSeries f = series_from_text(s, 1, 5);
        CHECK(to_text(f) == s);
    }

    Rng rng(81);
    for (std::size_t nv = 1; nv <= 3; ++nv)
        for (int trial = 0; trial < 8; ++trial) {
            const TruncatedSeries f = random_series(nv, 5, rng);
            CHECK(series_from_text(to_text(f), nv, 5) == f);
        }

    // whitespace is insignificant between tokens
    CHECK(series_from_text("  2*t1  t2   +   1 ", 2, 4) ==
          series_from_text("2*t1 t2 + 1", 2, 4));
}

TEST_CASE("series parse errors carry character positions") {
    auto message_of = [](const char* text, std::size_t nv) {
        try {
            series_from_text(text, nv, 4);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message_of("", 1).find("position 0") != std::string::npos);
    CHECK(message_of("1*t +", 1).find("position 5") != std::string::npos);
    CHECK(message_of("2*x", 1).find("position 2") != std::string::npos);
    CHECK(message_of("--1", 1).find("position 1") != std::string::npos);
    CHECK(message_of("1*t3", 2).find("out of range") != std::string::npos);
    CHECK(message_of("1*t", 1).empty()); // valid input: no exception
}

TEST_CASE("dual element text") {
    CHECK(to_text(DualUElement::basis(1, 4, MultiIndex{2}) * Rational(2)) == "2*d^2 t");
    CHECK(to_text(DualUElement::unit(1, 4)) == "1");
    CHECK(to_text(DualUElement(2, 4)) == "0");
    CHECK(to_text(DualUElement::basis(2, 4, MultiIndex{1, 2}) * Rational(-3, 2)) ==
          "-3/2*d t1 d^2 t2");

    const FormalGroupLaw add = builtin_law(Builtin::Additive, 3, 1);
    CHECK(to_text(tals(add, TruncatedSeries::variable(1, 3, 0))) == "1*d t");
    CHECK(to_text(tals(add, TruncatedSeries::monomial(1, 3, MultiIndex{2}, 1))) == "2*d^2 t");
}

TEST_CASE("Lie algebra text") {
    CHECK(lie_to_text(lie_from_fgl(builtin_law(Builtin::Heisenberg, 3))) == "[e1,e2] = 1*e3\n");
    CHECK(lie_to_text(lie_from_fgl(builtin_law(Builtin::AxPlusB, 3))) == "[e1,e2] = 1*e2\n");
    CHECK(lie_to_text(LieAlgebra::abelian(3)).empty());
}

TEST_CASE("alternating form text") {
    CECochain w(3, 2);
    w.add_term({0, 1}, -1);
    CHECK(to_text(w) == "-1*e1^ ∧ e2^");
    w.add_term({0, 2}, Rational(1, 2));
    CHECK(to_text(w) == "-1*e1^ ∧ e2^ + 1/2*e1^ ∧ e3^");

    CECochain nullary(3, 0);
    CHECK(to_text(nullary) == "0");
    nullary.add_term({}, 3);
    CHECK(to_text(nullary) == "3");
}

TEST_CASE("formal group JSON is stable under re-serialization") {
    for (const Builtin b : {Builtin::Multiplicative, Builtin::Heisenberg, Builtin::AxPlusB}) {
        const FormalGroupLaw g = builtin_law(b, 5);
        const std::string once = fgl_to_json(g);
        CHECK(once == fgl_to_json(fgl_from_json(once)));
    }
    CHECK_THROWS_AS(fgl_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(fgl_from_json("{\"dim\": 1}"), std::invalid_argument);
}

TEST_CASE("chain map report JSON: frozen bytes") {
    ChainMapReport r;
    r.law = "heisenberg";
    r.degree = 1;
    r.trials = 25;
    r.seed = 7;
    r.passed = true;
    const std::string expect = "{\n"
                               "  \"fgl\": \"heisenberg\",\n"
                               "  \"n\": 1,\n"
                               "  \"passed\": true,\n"
                               "  \"seed\": 7,\n"
                               "  \"trials\": 25\n"
                               "}\n";
    CHECK(chain_map_report_json(r) == expect);

    r.passed = false;
    r.counterexample = "1*t1";
    const std::string failing = chain_map_report_json(r);
    CHECK(failing.find("\"counterexample\": \"1*t1\"") != std::string::npos);
    CHECK(failing.find("\"passed\": false") != std::string::npos);
}
