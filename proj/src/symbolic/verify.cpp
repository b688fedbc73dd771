#include "oppair/symbolic/verify.hpp"

#include <chrono>

#include "oppair/classify.hpp"
#include "oppair/error.hpp"
#include "oppair/symbolic/expr.hpp"

namespace oppair::symbolic {

bool VerificationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::size_t VerificationReport::count(CheckKind kind) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.kind == kind;
  return n;
}

std::size_t VerificationReport::passed(CheckKind kind) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.kind == kind && c.passed;
  return n;
}

namespace {

std::string clip(std::string s) {
  constexpr std::size_t kMax = 240;
  if (s.size() > kMax) s = s.substr(0, kMax) + "...";
  return s;
}

SymbolicCheck identity(std::string name, const RationalFn& lhs, const RationalFn& rhs) {
  const RationalFn d = lhs - rhs;
  return {std::move(name), CheckKind::Identity, d.is_zero(), d.is_zero() ? "" : clip(d.to_string())};
}

SymbolicCheck identity(std::string name, const Pair& lhs, const Pair& rhs) {
  const RationalFn d0 = lhs[0] - rhs[0], d1 = lhs[1] - rhs[1];
  const bool ok = d0.is_zero() && d1.is_zero();
  return {std::move(name), CheckKind::Identity, ok,
          ok ? "" : clip("(" + d0.to_string() + ", " + d1.to_string() + ")")};
}

SymbolicCheck pole_check(std::string name, const RationalFn& form, const Poly& divisor, int expected) {
  const int got = pole_order(form, divisor);
  return {std::move(name), CheckKind::PoleOrder, got == expected,
          got == expected ? "" : "order " + std::to_string(got) + ", expected " + std::to_string(expected)};
}

SymbolicCheck fact(std::string name, bool ok, std::string why) {
  return {std::move(name), CheckKind::Tower, ok, ok ? "" : std::move(why)};
}

Pair vars(const Coords& c) { return {RationalFn::var(c[0]), RationalFn::var(c[1])}; }

// Forward then inverse, and inverse then forward.
void round_trips(std::vector<SymbolicCheck>& out, const ChartMap& m) {
  out.push_back(identity(m.name + " round trip (source)", substitute(m.inverse, m.target, m.forward), vars(m.source)));
  out.push_back(identity(m.name + " round trip (target)", substitute(m.forward, m.source, m.inverse), vars(m.target)));
}

SymbolicCheck isomorphic_to_golden(const Tower& t, classify::GoldenList::key_type tag, const std::string& label) {
  for (const auto& e : classify::golden_list().at(tag)) {
    if (e.label != label) continue;
    const bool ok = canonical_key(t.pair.config()) == canonical_key(e.config);
    return fact("final configuration is " + label, ok, "not isomorphic to " + label);
  }
  throw DomainError("golden entry " + label + " missing");
}

template <class F>
VerificationReport timed(std::string suite, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.suite = std::move(suite);
  body(r.checks);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<SymbolicCheck> tower_pole_checks(const Tower& tower) {
  std::vector<SymbolicCheck> out;
  const Configuration& y = tower.pair.config();
  for (const auto& chart : tower.charts) {
    if (chart.lines.empty()) continue;
    const RationalFn form = form_factor(chart);
    for (const auto& l : chart.lines) {
      const Poly divisor = line_polynomial(chart, l);
      const int mult = static_cast<int>(y.components()[y.index_of(l.component)].mult);
      out.push_back(pole_check("pole along {" + divisor.to_string() + " = 0} in " + chart.name + " (" + l.component +
                                   ")",
                               form, divisor, mult));
    }
  }
  return out;
}

VerificationReport verify_e8_charts() {
  return timed("e8", [](std::vector<SymbolicCheck>& out) {
    // (x, y) are the coordinates of U1 on F2; x3 = 1/x, y3 = -x^2 y on U3.
    const Coords xy = base_coords(1), x3y3 = base_coords(3);
    const Coords uv{Var::named("u"), Var::named("v")}, uv1{Var::named("u'"), Var::named("v'")};
    const RationalFn x = RationalFn::var(xy[0]), y = RationalFn::var(xy[1]);
    const RationalFn x3 = RationalFn::var(x3y3[0]), y3 = RationalFn::var(x3y3[1]);
    const RationalFn u = RationalFn::var(uv[0]), v = RationalFn::var(uv[1]);
    const RationalFn u1 = RationalFn::var(uv1[0]), v1 = RationalFn::var(uv1[1]);
    const RationalFn t = RationalFn::var("t");
    const Rational half(1, 2), quarter(1, 4);
    const Pair from_u3{1 / x3, -y3 / x3.pow(2)};

    // (x, y) -> (u, v) and its inverse through A.
    const Pair to_uv{x.pow(15) * y.pow(-8) - quarter * x.pow(12) * y.pow(-6) - half * t * x.pow(4) * y.pow(-2) +
                         half * x.pow(2) * y.pow(-1),
                     -x.pow(-2) * y};
    const RationalFn A = u * v.pow(6) + half * v.pow(5) + half * t * v.pow(4) + quarter;
    const Pair from_uv{A.pow(-1) * v.pow(-2), -A.pow(-2) * v.pow(-3)};
    const ChartMap uv_map{"(u,v)", xy, uv, to_uv, from_uv};

    out.push_back(identity("inverse of (u,v) recovers (u,v)", substitute(to_uv, xy, from_uv), vars(uv)));
    const RationalFn A_xy = A.substitute({{uv[0], to_uv[0]}, {uv[1], to_uv[1]}});
    out.push_back(identity("x^12 y^-8 = A^4", x.pow(12) * y.pow(-8), A_xy.pow(4)));
    const RationalFn J_inv = jacobian_det(from_uv, uv);
    const bool jac_ok = (J_inv - A.pow(-4)).is_zero() && (jacobian_det(uv_map) - x.pow(12) * y.pow(-8)).is_zero();
    out.push_back({"d(x,y)/d(u,v) = A^-4 and d(u,v)/d(x,y) = x^12 y^-8", CheckKind::Identity, jac_ok,
                   jac_ok ? "" : clip((J_inv - A.pow(-4)).to_string())});
    out.push_back(identity("A restricted to U3 is x3 y3^-2", A_xy.substitute({{xy[0], from_u3[0]}, {xy[1], from_u3[1]}}),
                           x3 * y3.pow(-2)));

    // (u', v') chart along D1.
    const Pair to_uv1{x.pow(-9) * y.pow(8) - 4 * x.pow(-6) * y.pow(6) - half * t * x.pow(-2) * y.pow(2) +
                          half * x.pow(-1) * y,
                      -x / y};
    const RationalFn A1 = u1 * v1.pow(6) + half * v1.pow(5) + half * t * v1.pow(4) + 4;
    const Pair from_uv1{A1.pow(-1) * v1.pow(-2), -A1.pow(-1) * v1.pow(-3)};
    const ChartMap uv1_map{"(u',v')", xy, uv1, to_uv1, from_uv1};
    const RationalFn A1_xy = A1.substitute({{uv1[0], to_uv1[0]}, {uv1[1], to_uv1[1]}});
    const RationalFn J1_inv = jacobian_det(from_uv1, uv1);
    const RationalFn r1 = A1_xy.substitute({{xy[0], from_u3[0]}, {xy[1], from_u3[1]}}) - x3.pow(-1) * y3.pow(2);
    const Pair r2 = substitute(to_uv1, xy, from_uv1);
    const RationalFn r3 = J1_inv + A1.pow(-3);
    const RationalFn r4 = jacobian_det(uv1_map) + x.pow(-9) * y.pow(6);
    const bool ok5 = r1.is_zero() && (r2[0] - u1).is_zero() && (r2[1] - v1).is_zero() && r3.is_zero() && r4.is_zero();
    out.push_back({"(u',v') chart: A' = x3^-1 y3^2, inverse, Jacobians", CheckKind::Identity, ok5,
                   ok5 ? "" : clip(r1.to_string() + "; " + r3.to_string() + "; " + r4.to_string())});

    // The reference form is dx ^ dy; transport it with the computed Jacobians.
    out.push_back(pole_check("pole order along D0' = {A = 0}", J_inv, A.num(), 4));
    out.push_back(pole_check("pole order along D1 = {A' = 0}", J1_inv, A1.num(), 3));

    const Tower tower = replay_blowup_tower(e8_tower_spec());
    out.push_back(isomorphic_to_golden(tower, KodairaTag::E8, "E8"));
    const ChartMap& zw8 = tower.map("Zw8");
    out.push_back({"Zw8 equals (u,v) on U3", CheckKind::Tower,
                   (zw8.forward[0] - to_uv[0].substitute({{xy[0], from_u3[0]}, {xy[1], from_u3[1]}})).is_zero() &&
                       (zw8.forward[1] - to_uv[1].substitute({{xy[0], from_u3[0]}, {xy[1], from_u3[1]}})).is_zero(),
                   ""});
    if (!out.back().passed) out.back().residual = "Zw8 differs from (u,v)";
    const Pair z8{x3 * y3.pow(-8) - quarter * y3.pow(-6) - half * t * y3.pow(-2) - half * y3.pow(-1), y3};
    SymbolicCheck c = identity("Zw8 coordinates", zw8.forward, z8);
    c.kind = CheckKind::Tower;
    out.push_back(std::move(c));
    for (auto& p : tower_pole_checks(tower)) {
      p.kind = CheckKind::Tower;
      out.push_back(std::move(p));
    }
  });
}

VerificationReport verify_gluing_sigma2() {
  return timed("gluing", [](std::vector<SymbolicCheck>& out) {
    const RationalFn eps = RationalFn::var("eps");
    const Coords c0 = base_coords(0), c1 = base_coords(1), c2 = base_coords(2), c3 = base_coords(3);
    const auto [X0, Y0] = vars(c0);
    const auto [X2, Y2] = vars(c2);

    // Inverses written out by hand.
    const ChartMap u1{"U0->U1", c0, c1, {X0, 1 / Y0}, sigma2_to_u0(1, eps)};
    const ChartMap u2{"U0->U2", c0, c2, {1 / X0, X0 * (eps - X0 * Y0)}, sigma2_to_u0(2, eps)};
    const ChartMap u3{"U2->U3", c2, c3, {X2, 1 / Y2}, {RationalFn::var(c3[0]), 1 / RationalFn::var(c3[1])}};
    for (const auto* m : {&u1, &u2, &u3}) {
      round_trips(out, *m);
      const RationalFn j = jacobian_det(*m);
      out.push_back({m->name + " Jacobian is nonzero", CheckKind::Identity, !j.is_zero(), j.is_zero() ? "zero" : ""});
    }
    out.push_back(identity("U0->U2 Jacobian is 1", jacobian_det(u2), RationalFn(1)));

    // U1 -> U3 through U0 and U2, and back.
    const Pair u1_to_u3 = substitute(u3.forward, c2, substitute(u2.forward, c0, sigma2_to_u0(1, eps)));
    const Pair u3_to_u1 = substitute(u1.forward, c0, sigma2_to_u0(3, eps));
    out.push_back(identity("cocycle U1->U3->U1", substitute(u3_to_u1, c3, u1_to_u3), vars(c1)));
    out.push_back(identity("cocycle U3->U1->U3", substitute(u1_to_u3, c1, u3_to_u1), vars(c3)));

    // eps = 0 gives F2.
    const RationalFn x3 = RationalFn::var(c3[0]), y3 = RationalFn::var(c3[1]);
    const RationalFn::Substitution at0{{Var::named("eps"), RationalFn(0)}};
    out.push_back(identity("eps = 0: U3->U1 is (1/x3, -x3^-2 y3)",
                           {u3_to_u1[0].substitute(at0), u3_to_u1[1].substitute(at0)}, {1 / x3, -y3 / x3.pow(2)}));

    // Form factors of the two bases, against hand computation.
    const BaseSurface s = base_surface("Sigma2_eps"), f = base_surface("F2");
    const auto y = [](int i) { return RationalFn::var(base_coords(i)[1]); };
    const auto x = [](int i) { return RationalFn::var(base_coords(i)[0]); };
    out.push_back(identity("Sigma2_eps form on U1", form_factor(s.charts[1]), -1 / y(1).pow(2)));
    out.push_back(identity("Sigma2_eps form on U2", form_factor(s.charts[2]), RationalFn(1)));
    out.push_back(identity("Sigma2_eps form on U3", form_factor(s.charts[3]), -1 / y(3).pow(2)));
    out.push_back(identity("F2 form on U0", form_factor(f.charts[0]), -1 / y(0).pow(2)));
    out.push_back(identity("F2 form on U2", form_factor(f.charts[2]), -1 / (x(2).pow(4) * y(2).pow(2))));
    out.push_back(identity("F2 form on U3", form_factor(f.charts[3]), 1 / x(3).pow(4)));
  });
}

VerificationReport verify_d4_tower() {
  return timed("d4", [](std::vector<SymbolicCheck>& out) {
    const Tower tower = replay_blowup_tower(d4_tower_spec());
    const RationalFn x1 = RationalFn::var(base_coords(1)[0]), y1 = RationalFn::var(base_coords(1)[1]);
    const RationalFn x3 = RationalFn::var(base_coords(3)[0]), y3 = RationalFn::var(base_coords(3)[1]);
    const char* nu[] = {"0", "1", "t"};
    for (int i = 0; i < 3; ++i) {
      const RationalFn a = parse_rational(nu[i]);
      const RationalFn kappa = RationalFn::var(std::string("kappa_") + nu[i]);
      const std::string k = std::to_string(i + 1), k2 = std::to_string(i + 5);
      out.push_back(identity("Zw" + k + " = ((x1-" + nu[i] + ")/y1, y1)", tower.map("Zw" + k).forward,
                             {(x1 - a) / y1, y1}));
      out.push_back(identity("Zw" + k2 + " = (((x1-" + nu[i] + ")/y1 - kappa_" + nu[i] + ")/y1, y1)",
                             tower.map("Zw" + k2).forward, {((x1 - a) / y1 - kappa) / y1, y1}));
    }
    out.push_back(identity("Zw4 = (x3/y3, y3)", tower.map("Zw4").forward, {x3 / y3, y3}));
    out.push_back(identity("Zw8 = ((x3/y3 - kappa_inf)/y3, y3)", tower.map("Zw8").forward,
                           {(x3 / y3 - RationalFn::var("kappa_inf")) / y3, y3}));
    for (const auto& m : tower.maps) round_trips(out, m);
    out.push_back(isomorphic_to_golden(tower, KodairaTag::D4, "D4-(2)"));
    for (auto& p : tower_pole_checks(tower)) out.push_back(std::move(p));
  });
}

VerificationReport verify_suite(const std::string& name) {
  if (name == "e8") return verify_e8_charts();
  if (name == "d4") return verify_d4_tower();
  if (name == "gluing") return verify_gluing_sigma2();
  throw ParseError("unknown suite '" + name + "' (expected e8, d4 or gluing)");
}

}  // namespace oppair::symbolic
