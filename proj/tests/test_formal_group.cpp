#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgl/formal_group.hpp"
#include "fgl/rational.hpp"
#include "fgl/series.hpp"

#include <filesystem>
#include <fstream>

using namespace fgl;

namespace {

/// X1 + Y1, X2 + Y2 + X1*Y2: fails associativity in degree 3
FormalGroupLaw broken_law(int D) {
    TruncatedSeries g1(4, D), g2(4, D);
    g1.add_term(MultiIndex{1, 0, 0, 0}, 1);
    g1.add_term(MultiIndex{0, 0, 1, 0}, 1);
    g2.add_term(MultiIndex{0, 1, 0, 0}, 1);
    g2.add_term(MultiIndex{0, 0, 0, 1}, 1);
    g2.add_term(MultiIndex{1, 0, 0, 1}, 1);
    return FormalGroupLaw({g1, g2});
}

std::vector<TruncatedSeries> compose(const std::vector<TruncatedSeries>& outer,
                                     const std::vector<TruncatedSeries>& inner) {
    std::vector<TruncatedSeries> out;
    out.reserve(outer.size());
    for (const auto& f : outer) out.push_back(substitute(f, inner));
    return out;
}

} // namespace

TEST_CASE("builtin laws satisfy the group axioms") {
    const int D = 6;
    for (const Builtin b :
         {Builtin::Additive, Builtin::Multiplicative, Builtin::Heisenberg, Builtin::AxPlusB}) {
        const FormalGroupLaw g = builtin_law(b, D, 3);
        const AxiomReport r = check_axioms(g);
        CHECK(r.unit_ok);
        CHECK(r.assoc_ok);
        CHECK_FALSE(r.first_violation.has_value());
    }
    CHECK(is_commutative(builtin_law(Builtin::Additive, D, 2)));
    CHECK(is_commutative(builtin_law(Builtin::Multiplicative, D)));
    CHECK_FALSE(is_commutative(builtin_law(Builtin::Heisenberg, D)));
    CHECK_FALSE(is_commutative(builtin_law(Builtin::AxPlusB, D)));
}

TEST_CASE("the broken two-dimensional candidate fails with the expected residual") {
    // Hand computation: with G = (X1+Y1, X2+Y2+X1*Y2),
    //   G(G(X,Y),Z)_2 = X2+Y2+X1*Y2 + Z2 + (X1+Y1)*Z2
    //   G(X,G(Y,Z))_2 = X2 + Y2+Z2+Y1*Z2 + X1*(Y2+Z2+Y1*Z2)
    // so LHS - RHS = -X1*Y1*Z2: component 2, one term, coefficient -1.
    const FormalGroupLaw g = broken_law(5);
    const AxiomReport r = check_axioms(g);
    CHECK(r.unit_ok);
    CHECK_FALSE(r.assoc_ok);
    REQUIRE(r.first_violation.has_value());
    const AxiomViolation& v = *r.first_violation;
    CHECK(v.axiom == "associativity");
    CHECK(v.component == 1);
    CHECK(v.monomial == MultiIndex{1, 0, 1, 0, 0, 1});
    CHECK(v.coefficient == -1);
}

TEST_CASE("gamma extracts the mixed degree-2 block") {
    const FormalGroupLaw mult = builtin_law(Builtin::Multiplicative, 4);
    CHECK(mult.gamma(0, 0, 0) == 1);

    const FormalGroupLaw h = builtin_law(Builtin::Heisenberg, 4);
    CHECK(h.gamma(2, 0, 1) == 1); // X1*Y2 in component 3
    CHECK(h.gamma(2, 1, 0) == 0);
    CHECK(h.gamma(0, 0, 0) == 0);

    const FormalGroupLaw ab = builtin_law(Builtin::AxPlusB, 4);
    CHECK(ab.gamma(1, 0, 1) == 1); // X1*Y2 from Y2*exp(X1)
    CHECK(ab.gamma(1, 1, 0) == 0);
}

TEST_CASE("antipode is a two-sided inverse") {
    const int D = 6;
    for (const Builtin b :
         {Builtin::Additive, Builtin::Multiplicative, Builtin::Heisenberg, Builtin::AxPlusB}) {
        const FormalGroupLaw g = builtin_law(b, D, 2);
        const std::size_t m = g.dim();
        const std::vector<TruncatedSeries> s = antipode(g);
        REQUIRE(s.size() == m);

        // arguments (X, s(X)) and (s(X), X) for the 2m-variable components
        std::vector<TruncatedSeries> right, left;
        for (std::size_t j = 0; j < m; ++j) right.push_back(TruncatedSeries::variable(m, D, j));
        for (const auto& f : s) right.push_back(f);
        for (const auto& f : s) left.push_back(f);
        for (std::size_t j = 0; j < m; ++j) left.push_back(TruncatedSeries::variable(m, D, j));

        for (std::size_t j = 0; j < m; ++j) {
            CHECK(substitute(g.component(j), right).is_zero());
            CHECK(substitute(g.component(j), left).is_zero());
        }
    }
}

TEST_CASE("multiplicative antipode is the alternating geometric series") {
    const int D = 10;
    const FormalGroupLaw g = builtin_law(Builtin::Multiplicative, D);
    const std::vector<TruncatedSeries> s = antipode(g);
    REQUIRE(s.size() == 1);
    // 1/(1+t) - 1 = -t + t^2 - t^3 + ...
    for (int n = 1; n <= D; ++n)
        CHECK(s[0].coeff(MultiIndex{n}) == Rational(n % 2 == 0 ? 1 : -1));
}

TEST_CASE("heisenberg antipode in closed form") {
    const FormalGroupLaw g = builtin_law(Builtin::Heisenberg, 6);
    const std::vector<TruncatedSeries> s = antipode(g);
    REQUIRE(s.size() == 3);
    // (a, b, c) -> (-a, -b, -c + a*b)
    CHECK(s[0] == -TruncatedSeries::variable(3, 6, 0));
    CHECK(s[1] == -TruncatedSeries::variable(3, 6, 1));
    TruncatedSeries s3(3, 6);
    s3.add_term(MultiIndex{0, 0, 1}, -1);
    s3.add_term(MultiIndex{1, 1, 0}, 1);
    CHECK(s[2] == s3);
}

TEST_CASE("rescaling the multiplicative law scales the quadratic term") {
    const int D = 5;
    const FormalGroupLaw g = builtin_law(Builtin::Multiplicative, D);
    const FormalGroupLaw g2 = rescale(g, 2, 3);
    // X + Y + 2^3 X*Y, still a group law
    CHECK(g2.gamma(0, 0, 0) == 8);
    CHECK(check_axioms(g2).ok());

    // degree-d coefficients scale by p^(h(d-1)): check on ax_plus_b degree 3
    const FormalGroupLaw ab = builtin_law(Builtin::AxPlusB, D);
    const FormalGroupLaw ab5 = rescale(ab, 5, 1);
    CHECK(check_axioms(ab5).ok());
    // Y2 * X1^2/2 has degree 3, so it picks up 5^2
    CHECK(ab.component(1).coeff(MultiIndex{2, 0, 0, 1}) == Rational(1, 2));
    CHECK(ab5.component(1).coeff(MultiIndex{2, 0, 0, 1}) == Rational(25, 2));
}

TEST_CASE("rescaling is functorial in the exponent") {
    const FormalGroupLaw g = builtin_law(Builtin::Heisenberg, 5);
    const FormalGroupLaw once = rescale(rescale(g, 3, 1), 3, 2);
    const FormalGroupLaw direct = rescale(g, 3, 3);
    for (std::size_t j = 0; j < g.dim(); ++j) CHECK(once.component(j) == direct.component(j));
}

TEST_CASE("homomorphism checks") {
    const int D = 6;
    const FormalGroupLaw add = builtin_law(Builtin::Additive, D, 1);
    const FormalGroupLaw mult = builtin_law(Builtin::Multiplicative, D);

    // exp(t) - 1 carries the additive law to the multiplicative one
    TruncatedSeries e(1, D);
    Rational c = 1;
    for (int n = 1; n <= D; ++n) {
        c /= n;
        e.add_term(MultiIndex{n}, c);
    }
    CHECK(is_homomorphism({e}, add, mult));

    // doubling is additive-to-additive but not additive-to-multiplicative
    const TruncatedSeries two_t = TruncatedSeries::variable(1, D, 0) * Rational(2);
    CHECK(is_homomorphism({two_t}, add, add));
    CHECK_FALSE(is_homomorphism({two_t}, add, mult));

    // identity is a homomorphism only between equal laws
    const TruncatedSeries t = TruncatedSeries::variable(1, D, 0);
    CHECK(is_homomorphism({t}, mult, mult));
    CHECK_FALSE(is_homomorphism({t}, add, mult));
}

TEST_CASE("scaling homomorphisms between a law and its rescaling") {
    const int D = 5;
    const long p = 3;
    const int h = 2;
    for (const Builtin b : {Builtin::Multiplicative, Builtin::Heisenberg, Builtin::AxPlusB}) {
        const FormalGroupLaw g = builtin_law(b, D);
        const FormalGroupLaw gh = rescale(g, p, h);
        const std::size_t m = g.dim();
        const Rational ph = int_pow(p, h);

        std::vector<TruncatedSeries> down, up;
        for (std::size_t j = 0; j < m; ++j) {
            down.push_back(TruncatedSeries::variable(m, D, j) * (Rational(1) / ph));
            up.push_back(TruncatedSeries::variable(m, D, j) * ph);
        }
        // x -> p^-h x carries G to its rescaling, x -> p^h x goes back
        CHECK(is_homomorphism(down, g, gh));
        CHECK(is_homomorphism(up, gh, g));

        const std::vector<TruncatedSeries> round = compose(down, up);
        for (std::size_t j = 0; j < m; ++j)
            CHECK(round[j] == TruncatedSeries::variable(m, D, j));
    }
}

TEST_CASE("JSON round trip preserves every coefficient") {
    const FormalGroupLaw g = builtin_law(Builtin::AxPlusB, 7);
    const FormalGroupLaw back = fgl_from_json(fgl_to_json(g));
    CHECK(back.dim() == g.dim());
    CHECK(back.trunc() == g.trunc());
    for (std::size_t j = 0; j < g.dim(); ++j) CHECK(back.component(j) == g.component(j));

    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "fgl_roundtrip_test.fgl";
    save_fgl(g, path.string());
    const FormalGroupLaw loaded = load_fgl(path.string());
    for (std::size_t j = 0; j < g.dim(); ++j) CHECK(loaded.component(j) == g.component(j));
    std::filesystem::remove(path);
}

TEST_CASE("structural validation rejects malformed candidates") {
    // constant term must vanish
    TruncatedSeries bad(2, 4);
    bad.add_term(MultiIndex{0, 0}, 1);
    CHECK_THROWS_AS(FormalGroupLaw({bad}), std::invalid_argument);

    // components must live in 2m variables
    CHECK_THROWS_AS(FormalGroupLaw({TruncatedSeries::variable(3, 4, 0)}), std::invalid_argument);

    // truncation degrees must agree
    CHECK_THROWS_AS(FormalGroupLaw({TruncatedSeries::variable(4, 4, 0),
                                    TruncatedSeries::variable(4, 5, 1)}),
                    std::invalid_argument);
}
