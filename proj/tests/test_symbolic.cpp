#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coiso/ideal.hpp"
#include "coiso/linsolve.hpp"
#include "coiso/parser.hpp"
#include "coiso/ratfunc.hpp"

#include <random>

using namespace coiso;

namespace {

VarList xy() { return make_vars({"x", "y"}); }

Poly P(const std::string& s, const VarList& v) { return parse_poly(s, v); }

Poly random_poly(const VarList& vars, int max_deg, int nterms, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, max_deg);
    Poly p(vars);
    for (int t = 0; t < nterms; ++t) {
        Poly::Exp e(vars->size(), 0);
        int budget = deg(rng);
        std::uniform_int_distribution<size_t> pick(0, vars->size() - 1);
        for (int d = 0; d < budget; ++d) e[pick(rng)] += 1;
        p.add_term(e, Rat(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    auto v = xy();
    Poly a = P("x^2 - 2*x*y + y^2", v);
    Poly b = P("x - y", v);
    CHECK(a == b * b);
    CHECK(P("(x + y)*(x - y)", v) == P("x^2 - y^2", v));
    CHECK(P("x", v).derivative(0) == P("1", v));
    CHECK(P("x^3*y", v).derivative(1) == P("x^3", v));
    CHECK((a - a).is_zero());
    CHECK(P("1/2*x + 1/2*x", v) == P("x", v));
    CHECK(P("2^3", v) == P("8", v));
    CHECK(P("-x - -y", v) == P("y - x", v));
}

TEST_CASE("parser rejects juxtaposition and unknown variables") {
    auto v = xy();
    CHECK_THROWS_AS(parse_poly("2x", v), ValidationError);
    CHECK_THROWS_AS(parse_poly("x y", v), ValidationError);
    CHECK_THROWS_AS(parse_poly("z + 1", v), ValidationError);
    CHECK_THROWS_AS(parse_poly("x +", v), ValidationError);
    CHECK_THROWS_AS(parse_poly("1/x", v), ValidationError);  // poly context
}

TEST_CASE("ratfunc literals against a distinguished denominator") {
    auto v = xy();
    Poly h = P("x", v);
    RatFunc r = parse_ratfunc("(1 + x^2)/x^2", v, h);
    CHECK(r.hpow() == 2);
    RatFunc s = parse_ratfunc("y/x - y/x", v, h);
    CHECK(s.is_zero());
    CHECK(parse_ratfunc("x^-2", v, h) == parse_ratfunc("1/x^2", v, h));
    CHECK_THROWS_AS(parse_ratfunc("1/(1 + x)", v, h), ValidationError);
    // reduction: x^2/x normalizes to a polynomial
    CHECK(parse_ratfunc("x^2/x", v, h).is_poly());
}

TEST_CASE("ratfunc arithmetic, derivative, inverse") {
    auto v = xy();
    Poly h = P("x", v);
    RatFunc a = parse_ratfunc("1/x", v, h);
    RatFunc b = parse_ratfunc("y", v, h);
    CHECK((a * b).to_string() == "(y)/(x)");
    CHECK((a + a) == parse_ratfunc("2/x", v, h));
    // d/dx (1/x) = -1/x^2
    CHECK(a.derivative(0) == parse_ratfunc("-1/x^2", v, h));
    auto inv = parse_ratfunc("-3*x^2", v, h).inverse();
    REQUIRE(inv.has_value());
    CHECK((*inv * parse_ratfunc("-3*x^2", v, h)) == RatFunc::constant(v, Rat(1)));
    CHECK(!RatFunc(P("1 + x", v), h, 0).inverse().has_value());
}

TEST_CASE("groebner: already a basis") {
    auto v = xy();
    Ideal I({P("x", v)});
    CHECK(I.basis().size() == 1);
    CHECK(I.basis()[0] == P("x", v));
}

TEST_CASE("groebner: one reduction step") {
    auto v = xy();
    Ideal I({P("x + y", v), P("x - y", v)});
    REQUIRE(I.basis().size() == 2);
    CHECK(I.contains(P("x", v)));
    CHECK(I.contains(P("y", v)));
    CHECK(!I.contains(P("1", v)));
}

TEST_CASE("groebner: grlex textbook example") {
    auto v = xy();
    Ideal I({P("x^2 - y", v), P("x^3", v)}, MonomialOrder::Grlex);
    // hand Buchberger: S(x^2-y, x^3) -> xy, then S(x^2-y, xy) -> y^2
    std::vector<Poly> expect = {P("x^2 - y", v), P("x*y", v), P("y^2", v)};
    REQUIRE(I.basis().size() == 3);
    for (const Poly& e : expect) {
        bool found = false;
        for (const Poly& g : I.basis()) found = found || g == e;
        CHECK(found);
    }
    CHECK(I.reduce(P("x^3", v)).is_zero());
}

TEST_CASE("reduce examples") {
    auto v = xy();
    Ideal I({P("x", v)});
    CHECK(I.reduce(P("x^2", v)).is_zero());
    CHECK(I.reduce(P("x*y + y", v)) == P("y", v));
}

TEST_CASE("groebner membership closure and idempotence (random)") {
    auto v = make_vars({"x", "y", "z"});
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 10; ++trial) {
        Poly g1 = random_poly(v, 2, 3, rng);
        Poly g2 = random_poly(v, 2, 3, rng);
        if (g1.is_zero() || g2.is_zero()) continue;
        Ideal I({g1, g2});
        Poly a = random_poly(v, 2, 2, rng);
        Poly b = random_poly(v, 2, 2, rng);
        Poly f = a * g1 + b * g2;
        CHECK(I.reduce(f).is_zero());
        Poly r = I.reduce(random_poly(v, 3, 4, rng));
        CHECK(I.reduce(r) == r);
    }
}

TEST_CASE("groebner output independent of generator permutation") {
    auto v = make_vars({"x", "y", "z"});
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Poly> gens = {random_poly(v, 2, 3, rng), random_poly(v, 2, 3, rng),
                                  random_poly(v, 1, 2, rng)};
        std::vector<Poly> clean;
        for (auto& g : gens)
            if (!g.is_zero()) clean.push_back(g);
        if (clean.size() < 2) continue;
        Ideal I1(clean);
        std::vector<Poly> rev(clean.rbegin(), clean.rend());
        Ideal I2(rev);
        // cross-reduction: both reduced bases agree (reduced GB is unique)
        REQUIRE(I1.basis().size() == I2.basis().size());
        for (const Poly& g : I1.basis()) CHECK(I2.reduce(g).is_zero());
        for (const Poly& g : I2.basis()) CHECK(I1.reduce(g).is_zero());
    }
}

TEST_CASE("solve_linear: examples") {
    {
        LinSystem s;
        s.add_unknown("u");
        s.add_row({Rat(1)}, Rat(0));
        auto sol = solve_linear(s);
        REQUIRE(sol.feasible);
        CHECK(sol.particular[0] == 0);
        CHECK(sol.nullity == 0);
    }
    {
        LinSystem s;
        s.add_unknown("u");
        s.add_unknown("v");
        s.add_row({Rat(1), Rat(1)}, Rat(1));
        s.add_row({Rat(1), Rat(-1)}, Rat(1));
        auto sol = solve_linear(s);
        REQUIRE(sol.feasible);
        CHECK(sol.particular[0] == 1);
        CHECK(sol.particular[1] == 0);
    }
    {
        LinSystem s;
        s.add_unknown("u");
        s.add_row({Rat(0)}, Rat(1));
        auto sol = solve_linear(s);
        CHECK(!sol.feasible);
        REQUIRE(sol.certificate_row.has_value());
        CHECK(*sol.certificate_row == 0);
    }
}

TEST_CASE("solve_linear: random systems check back-substitution") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 3 + (trial % 3);
        size_t m = 2 + (trial % 4);
        LinSystem s;
        for (size_t j = 0; j < n; ++j) s.add_unknown("u" + std::to_string(j));
        for (size_t i = 0; i < m; ++i) {
            std::vector<Rat> row;
            for (size_t j = 0; j < n; ++j) row.push_back(Rat(val(rng)));
            s.add_row(row, Rat(val(rng)));
        }
        auto sol = solve_linear(s);
        if (!sol.feasible) continue;
        for (size_t i = 0; i < m; ++i) {
            Rat acc(0);
            for (size_t j = 0; j < n; ++j) acc += s.matrix[i][j] * sol.particular[j];
            CHECK(acc == s.rhs[i]);
        }
        CHECK(sol.rank + sol.nullity == static_cast<int>(n));
    }
}

TEST_CASE("saturation membership on localized charts") {
    auto v = xy();
    {
        Ideal I({P("x", v)});
        SaturationOracle sat(I, P("1 + y", v), 10, true);
        CHECK(sat.member(P("x", v)) == Verdict::True);
        CHECK(sat.member(P("y", v)) == Verdict::False);
    }
    {
        // localizing at h = x kills V(x): 1 becomes a member
        Ideal I({P("x", v)});
        SaturationOracle sat(I, P("x", v), 10, true);
        CHECK(sat.member(P("1", v)) == Verdict::True);
    }
    {
        // inexact mode reports undecided instead of false
        Ideal I({P("x", v)});
        SaturationOracle sat(I, P("1 + x", v), 3, false);
        CHECK(sat.member(P("y", v)) == Verdict::Undecided);
        CHECK(sat.member(P("x*y", v)) == Verdict::True);
    }
}

TEST_CASE("poly_det and adjugate") {
    auto v = xy();
    std::vector<std::vector<Poly>> m = {{P("x", v), P("1", v)}, {P("y", v), P("x", v)}};
    CHECK(poly_det(m) == P("x^2 - y", v));
    auto adj = poly_adjugate(m);
    // m * adj = det * Id
    Poly det = poly_det(m);
    for (size_t i = 0; i < 2; ++i) {
        for (size_t j = 0; j < 2; ++j) {
            Poly acc(v);
            for (size_t k = 0; k < 2; ++k) acc += m[i][k] * adj[k][j];
            CHECK(acc == (i == j ? det : Poly::zero(v)));
        }
    }
}
