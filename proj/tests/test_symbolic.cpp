#include <gtest/gtest.h>

#include <random>

#include "oppair/error.hpp"
#include "oppair/symbolic/expr.hpp"
#include "oppair/symbolic/verify.hpp"

using namespace oppair;
using namespace oppair::symbolic;

namespace {

RationalFn R(std::string_view s) { return parse_rational(s); }

// Random polynomial in the given variables, small coefficients.
Poly random_poly(std::mt19937& rng, const std::vector<Var>& vs, int terms, int max_deg) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, max_deg);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Poly m(coef(rng));
    for (Var v : vs) m = m * Poly::var(v, deg(rng));
    p = p + m;
  }
  return p;
}

// Value at a rational point; an oracle independent of the reduction code.
Rational eval(const Poly& p, const std::map<Var, Rational>& at) {
  Rational sum = 0;
  std::map<std::uint32_t, Rational> by_id;
  for (const auto& [v, value] : at) by_id.emplace(v.id(), value);
  for (const auto& t : p.terms()) {
    Rational term = t.coeff;
    for (const auto& [id, e] : t.mono)
      for (std::uint32_t k = 0; k < e; ++k) term *= by_id.at(id);
    sum += term;
  }
  return sum;
}

Rational eval(const RationalFn& f, const std::map<Var, Rational>& at) {
  return eval(f.num(), at) / eval(f.den(), at);
}

}  // namespace

TEST(Poly, Basics) {
  const Var x = Var::named("x"), y = Var::named("y");
  EXPECT_EQ(Var::named("x"), x);
  EXPECT_EQ(x.name(), "x");
  const Poly p = Poly::var(x) * Poly::var(y) + Poly(3);
  EXPECT_EQ(p.degree(x), 1u);
  EXPECT_EQ(p.constant_term(), 3);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ((p - p).is_zero(), true);
  EXPECT_EQ(Poly::var(x).pow(3).derivative(x), Poly(3) * Poly::var(x).pow(2));
}

TEST(Poly, ExactDivisionAndGcd) {
  const Var x = Var::named("x"), y = Var::named("y");
  const Poly X = Poly::var(x), Y = Poly::var(y);
  const Poly a = (X + Y) * (X - Poly(2) * Y);
  EXPECT_EQ(*a.divide_exact(X + Y), X - Poly(2) * Y);
  EXPECT_FALSE(a.divide_exact(X + Poly(1)).has_value());
  EXPECT_EQ(gcd(a, (X + Y) * (Y + Poly(5))), X + Y);
  EXPECT_EQ(gcd(X * X * Y, X * Y * Y), X * Y);
  EXPECT_EQ(gcd(X + Poly(1), Y + Poly(1)), Poly(1));
}

TEST(Poly, GcdOfRandomProducts) {
  std::mt19937 rng(7);
  const std::vector<Var> vs{Var::named("p"), Var::named("q"), Var::named("r")};
  for (int trial = 0; trial < 60; ++trial) {
    const Poly g = random_poly(rng, vs, 3, 2) + Poly::var(vs[0], 3);
    const Poly a = random_poly(rng, vs, 3, 2), b = random_poly(rng, vs, 3, 2);
    if (a.is_zero() || b.is_zero()) continue;
    const Poly d = gcd(g * a, g * b);
    // d is a multiple of g and divides both products.
    EXPECT_TRUE(d.divide_exact(g.monic()).has_value() || d.divide_exact(g).has_value());
    EXPECT_TRUE((g * a).divide_exact(d).has_value());
    EXPECT_TRUE((g * b).divide_exact(d).has_value());
  }
}

TEST(RationalFn, Reduction) {
  EXPECT_EQ(R("(v^2 - v)/v"), R("v - 1"));
  EXPECT_TRUE(R("(v^2 - v)/v").is_polynomial());
  EXPECT_EQ(R("v^4").derivative(Var::named("v")), R("4*v^3"));
  EXPECT_EQ(R("1/x + 1/y"), R("(x + y)/(x*y)"));
  EXPECT_EQ(R("x^-2"), R("1/x^2"));
  EXPECT_EQ(R("x^(-2)"), R("1/(x*x)"));
  EXPECT_TRUE((R("x/(x+1)") - R("1 - 1/(x+1)")).is_zero());
  EXPECT_THROW(R("1/(x - x)"), DomainError);
}

TEST(RationalFn, FieldOperationsAgreeWithEvaluation) {
  std::mt19937 rng(9);
  const std::vector<Var> vs{Var::named("a"), Var::named("b")};
  std::uniform_int_distribution<int> pt(-7, 7);
  for (int trial = 0; trial < 80; ++trial) {
    const RationalFn f(random_poly(rng, vs, 3, 3) + Poly(1), random_poly(rng, vs, 2, 2) + Poly::var(vs[0], 4));
    const RationalFn g(random_poly(rng, vs, 3, 2) + Poly(2), random_poly(rng, vs, 2, 3) + Poly::var(vs[1], 3));
    Rational a0(pt(rng), 3), b0(pt(rng) + 11, 2);
    a0.canonicalize();
    b0.canonicalize();
    const std::map<Var, Rational> at{{vs[0], a0}, {vs[1], b0}};
    const auto defined = [&](const RationalFn& h) { return eval(h.den(), at) != 0; };
    if (!defined(f) || !defined(g) || eval(g.num(), at) == 0) continue;
    EXPECT_EQ(eval(f + g, at), eval(f, at) + eval(g, at));
    EXPECT_EQ(eval(f * g, at), eval(f, at) * eval(g, at));
    EXPECT_EQ(eval(f / g, at), eval(f, at) / eval(g, at));
    EXPECT_TRUE((f * g / g - f).is_zero());
  }
}

TEST(Expr, ParserErrors) {
  EXPECT_THROW(Expr::parse("x +"), ParseError);
  EXPECT_THROW(Expr::parse("(x"), ParseError);
  EXPECT_THROW(Expr::parse("x ^ y"), ParseError);
  EXPECT_THROW(Expr::parse("x $ 2"), ParseError);
  EXPECT_EQ(R("t/2"), RationalFn(Rational(1, 2)) * R("t"));
  const Expr::Env env{{"t", RationalFn(4)}};
  EXPECT_EQ(parse_rational("t/2 + 1", env), RationalFn(3));
}

TEST(Chart, JacobianAndPoleOrders) {
  const Coords xy{Var::named("x"), Var::named("y")};
  EXPECT_EQ(jacobian_det(Pair{R("x/y"), R("y")}, xy), R("1/y"));
  const RationalFn f = R("(x + 1)/(y^3 * (x - y)^2)");
  EXPECT_EQ(pole_order(f, Poly::var(xy[1])), 3);
  EXPECT_EQ(pole_order(f, R("x - y").num()), 2);
  EXPECT_EQ(pole_order(f, R("x + 1").num()), -1);
  // Orders add under multiplication.
  const RationalFn g = R("y^2/(x - y)");
  EXPECT_EQ(pole_order(f * g, Poly::var(xy[1])), pole_order(f, Poly::var(xy[1])) + pole_order(g, Poly::var(xy[1])));
  EXPECT_THROW(pole_order(f, Poly(2)), DomainError);
}

// d(h o k) = dh(k) * dk for random polynomial maps.
TEST(Chart, ChainRule) {
  std::mt19937 rng(21);
  const Coords ab{Var::named("a"), Var::named("b")}, cd{Var::named("c"), Var::named("d")};
  for (int trial = 0; trial < 25; ++trial) {
    const Pair h{RationalFn(random_poly(rng, {ab[0], ab[1]}, 3, 2)), RationalFn(random_poly(rng, {ab[0], ab[1]}, 3, 2))};
    const Pair k{RationalFn(random_poly(rng, {cd[0], cd[1]}, 3, 2)), RationalFn(random_poly(rng, {cd[0], cd[1]}, 3, 2))};
    const Pair hk = substitute(h, ab, k);
    const RationalFn lhs = jacobian_det(hk, cd);
    const RationalFn rhs = substitute({jacobian_det(h, ab), RationalFn(0)}, ab, k)[0] * jacobian_det(k, cd);
    EXPECT_TRUE((lhs - rhs).is_zero());
  }
}

TEST(Tower, SpecRoundTripAndErrors) {
  const TowerSpec e8 = e8_tower_spec();
  const TowerSpec back = parse_tower_spec(to_json(e8).dump());
  ASSERT_EQ(back.centers.size(), 8u);
  EXPECT_EQ(back.base, "F2");
  EXPECT_EQ(back.centers[6].point[0], "t/2");
  EXPECT_THROW(parse_tower_spec("{"), ParseError);
  EXPECT_THROW(parse_tower_spec(R"({"base":"F2","centers":[{"chart":"U3","point":["0"]}]})"), ParseError);
  EXPECT_THROW(base_surface("P3"), DomainError);
  // (1, 1) in U3 of F2 lies on no divisor line.
  EXPECT_THROW(replay_blowup_tower({"F2", {{"U3", {"1", "1"}}}}), DomainError);
  EXPECT_THROW(replay_blowup_tower({"F2", {{"Zw9", {"0", "0"}}}}), DomainError);
}

TEST(Tower, CombinatorialShadow) {
  const Tower t = replay_blowup_tower(e8_tower_spec());
  ASSERT_EQ(t.pair.history().size(), 8u);
  const int mults[] = {3, 6, 5, 4, 3, 2, 1, 0};
  for (int k = 0; k < 8; ++k) EXPECT_EQ(t.pair.history()[k].multiplicity, mults[k]) << "E" << k + 1;
  EXPECT_EQ(t.pair.history()[0].kind, geometry::StepKind::BlowupSmoothPoint);  // U3 meets only f
  EXPECT_TRUE(validate_op_pair(t.pair.config()).ok());
  EXPECT_EQ(t.charts.size(), 4u + 16u);
}

TEST(Tower, FormFactorsTransport) {
  // The form factor of a child chart is the parent's times the local Jacobian.
  const Tower t = replay_blowup_tower(d4_tower_spec());
  for (std::size_t i = 0; i < t.local.size(); ++i) {
    const ChartMap& m = t.local[i];
    const Chart& child = t.chart(m.name);
    const Chart& parent = t.chart(child.parent);
    const RationalFn expected = substitute({form_factor(parent), RationalFn(0)}, parent.coords, m.inverse)[0] *
                                jacobian_det(m.inverse, m.target);
    EXPECT_TRUE((form_factor(child) - expected).is_zero()) << m.name;
  }
}

TEST(Suites, AllPass) {
  for (const std::string s : {"e8", "gluing", "d4"}) {
    const auto r = verify_suite(s);
    EXPECT_TRUE(r.ok()) << s;
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << s << ": " << c.name << " " << c.residual;
  }
  const auto e8 = verify_e8_charts();
  EXPECT_EQ(e8.count(CheckKind::Identity), 5u);
  EXPECT_EQ(e8.count(CheckKind::PoleOrder), 2u);
  EXPECT_THROW(verify_suite("e7"), ParseError);
}
