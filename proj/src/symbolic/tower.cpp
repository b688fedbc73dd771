#include "oppair/symbolic/tower.hpp"

#include "oppair/error.hpp"
#include "oppair/symbolic/expr.hpp"

namespace oppair::symbolic {

using nlohmann::json;

Coords base_coords(int chart) {
  if (chart < 0 || chart > 3) throw std::invalid_argument("chart index out of range");
  const std::string i = std::to_string(chart);
  return {Var::named("x" + i), Var::named("y" + i)};
}

Pair sigma2_to_u0(int chart, const RationalFn& eps) {
  const auto [x, y] = base_coords(chart);
  const RationalFn X = RationalFn::var(x), Y = RationalFn::var(y);
  switch (chart) {
    case 0: return {X, Y};
    case 1: return {X, 1 / Y};
    case 2: return {1 / X, X * (eps - X * Y)};
    default: {
      const Pair to_u2{X, 1 / Y};
      return substitute(sigma2_to_u0(2, eps), base_coords(2), to_u2);
    }
  }
}

namespace {

DivisorLine line(int coord, std::string component) { return {coord, RationalFn(0), std::move(component)}; }

}  // namespace

BaseSurface base_surface(std::string_view name) {
  BaseSurface b;
  b.name = std::string(name);
  std::vector<std::vector<DivisorLine>> lines(4);
  RationalFn eps;
  int reference;
  if (name == "Sigma2_eps") {
    eps = RationalFn::var("eps");
    reference = 0;
    b.model = {geometry::MinimalModel::F2SInfinity, 2, true};
    lines[1] = {line(1, "s_inf")};
    lines[2] = {line(0, "f")};
    lines[3] = {line(0, "f"), line(1, "s_inf")};
  } else if (name == "F2") {
    eps = RationalFn(0);
    reference = 1;
    b.model = {geometry::MinimalModel::Fn, 2, false};
    lines[0] = {line(1, "s0")};
    lines[2] = {line(0, "f"), line(1, "s0")};
    lines[3] = {line(0, "f")};
  } else {
    throw DomainError("unknown base surface '" + std::string(name) + "' (expected Sigma2_eps or F2)");
  }
  b.reference = "U" + std::to_string(reference);

  // U0 coordinates in terms of the reference chart, by inverting its gluing.
  const Coords u0 = base_coords(0);
  Pair u0_to_ref{RationalFn::var(u0[0]), RationalFn::var(u0[1])};
  if (reference == 1) u0_to_ref[1] = 1 / RationalFn::var(u0[1]);

  for (int i = 0; i < 4; ++i) {
    Chart c;
    c.name = "U" + std::to_string(i);
    c.coords = base_coords(i);
    c.lines = lines[i];
    c.to_reference = substitute(u0_to_ref, u0, sigma2_to_u0(i, eps));
    b.charts.push_back(std::move(c));
  }
  return b;
}

TowerSpec parse_tower_spec(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("tower spec: ") + e.what());
  }
  try {
    TowerSpec s;
    s.base = j.at("base").get<std::string>();
    for (const auto& c : j.at("centers")) {
      const auto& p = c.at("point");
      if (!p.is_array() || p.size() != 2) throw ParseError("tower spec: point must be a pair of expressions");
      s.centers.push_back({c.at("chart").get<std::string>(), {p[0].get<std::string>(), p[1].get<std::string>()}});
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("tower spec: ") + e.what());
  }
}

json to_json(const TowerSpec& spec) {
  json centers = json::array();
  for (const auto& c : spec.centers) centers.push_back({{"chart", c.chart}, {"point", {c.point[0], c.point[1]}}});
  return {{"schema_version", "1"}, {"base", spec.base}, {"centers", std::move(centers)}};
}

TowerSpec d4_tower_spec() {
  return {"Sigma2_eps",
          {{"U1", {"0", "0"}},
           {"U1", {"1", "0"}},
           {"U1", {"t", "0"}},
           {"U3", {"0", "0"}},
           {"Zw1", {"kappa_0", "0"}},
           {"Zw2", {"kappa_1", "0"}},
           {"Zw3", {"kappa_t", "0"}},
           {"Zw4", {"kappa_inf", "0"}}}};
}

TowerSpec e8_tower_spec() {
  return {"F2",
          {{"U3", {"0", "0"}},
           {"Zw1", {"0", "0"}},
           {"Zw2", {"1/4", "0"}},
           {"Zw3", {"0", "0"}},
           {"Zw4", {"0", "0"}},
           {"Zw5", {"0", "0"}},
           {"Zw6", {"t/2", "0"}},
           {"Zw7", {"1/2", "0"}}}};
}

const Chart& Tower::chart(std::string_view name) const {
  for (const auto& c : charts)
    if (c.name == name) return c;
  throw DomainError("no chart named '" + std::string(name) + "'");
}

const ChartMap& Tower::map(std::string_view name) const {
  for (const auto& m : maps)
    if (m.name == name) return m;
  throw DomainError("no chart map named '" + std::string(name) + "'");
}

namespace {

// Blowup of the centre (p, q) in a chart with coordinates (a, b).
struct NewCharts {
  Chart zw, zW;
  ChartMap zw_map, zW_map;
};

NewCharts blow_up_chart(const Chart& parent, const RationalFn& p, const RationalFn& q, int k,
                        const std::string& exceptional) {
  const std::string ks = std::to_string(k);
  const RationalFn a = RationalFn::var(parent.coords[0]), b = RationalFn::var(parent.coords[1]);
  NewCharts out;

  Chart& zw = out.zw;
  zw.name = "Zw" + ks;
  zw.parent = parent.name;
  zw.coords = {Var::named("Z" + ks), Var::named("w" + ks)};
  const RationalFn Z = RationalFn::var(zw.coords[0]), w = RationalFn::var(zw.coords[1]);
  const Pair zw_inverse{Z * w + p, w + q};
  zw.lines.push_back({1, RationalFn(0), exceptional});

  Chart& zW = out.zW;
  zW.name = "zW" + ks;
  zW.parent = parent.name;
  zW.coords = {Var::named("z" + ks), Var::named("W" + ks)};
  const RationalFn z = RationalFn::var(zW.coords[0]), W = RationalFn::var(zW.coords[1]);
  const Pair zW_inverse{z + p, W * z + q};
  zW.lines.push_back({0, RationalFn(0), exceptional});

  for (const auto& l : parent.lines) {
    if (l.coord == 0) {
      if (l.value == p) zw.lines.push_back({0, RationalFn(0), l.component});
      else zW.lines.push_back({0, l.value - p, l.component});
    } else {
      if (l.value == q) zW.lines.push_back({1, RationalFn(0), l.component});
      else zw.lines.push_back({1, l.value - q, l.component});
    }
  }

  zw.to_reference = substitute(parent.to_reference, parent.coords, zw_inverse);
  zW.to_reference = substitute(parent.to_reference, parent.coords, zW_inverse);

  out.zw_map = {zw.name, parent.coords, zw.coords, {(a - p) / (b - q), b - q}, zw_inverse};
  out.zW_map = {zW.name, parent.coords, zW.coords, {a - p, (b - q) / (a - p)}, zW_inverse};
  return out;
}

// Compose parent-local maps back to a base chart.
ChartMap compose(const ChartMap& outer, const ChartMap& inner) {
  return {outer.name, inner.source, outer.target, substitute(outer.forward, outer.source, inner.forward),
          substitute(inner.inverse, inner.target, outer.inverse)};
}

}  // namespace

Tower replay_blowup_tower(const TowerSpec& spec) {
  BaseSurface base = base_surface(spec.base);
  Tower t{base, base.charts, {}, {}, geometry::minimal_pair(base.model)};

  for (std::size_t i = 0; i < spec.centers.size(); ++i) {
    const auto& c = spec.centers[i];
    const int k = static_cast<int>(i) + 1;
    const std::string exceptional = "E" + std::to_string(k);
    const Chart parent = t.chart(c.chart);
    const RationalFn p = parse_rational(c.point[0]), q = parse_rational(c.point[1]);

    std::vector<std::string> through;
    for (const auto& l : parent.lines)
      if (l.value == (l.coord == 0 ? p : q)) through.push_back(l.component);
    if (through.empty())
      throw DomainError("centre " + std::to_string(k) + " (" + c.point[0] + ", " + c.point[1] + ") in chart " +
                        c.chart + " lies on no divisor line");
    const geometry::Center centre = through.size() == 1 ? geometry::Center::smooth_point(through[0])
                                                        : geometry::Center::node(through[0], through[1]);
    geometry::BirationalStep step;
    Configuration next = geometry::blowup(t.pair.config(), centre, &step, exceptional);
    auto history = t.pair.history();
    history.push_back(std::move(step));
    t.pair = geometry::SurfacePair(t.pair.origin(), std::move(next), std::move(history));

    NewCharts nc = blow_up_chart(parent, p, q, k, exceptional);
    t.local.push_back(nc.zw_map);
    t.local.push_back(nc.zW_map);
    auto from_base = [&](const ChartMap& m) {
      if (parent.parent.empty()) return m;
      return compose(m, t.map(parent.name));
    };
    t.maps.push_back(from_base(nc.zw_map));
    t.maps.push_back(from_base(nc.zW_map));
    t.charts.push_back(std::move(nc.zw));
    t.charts.push_back(std::move(nc.zW));
  }
  return t;
}

RationalFn form_factor(const Chart& chart) { return jacobian_det(chart.to_reference, chart.coords); }

Poly line_polynomial(const Chart& chart, const DivisorLine& line) {
  if (!line.value.is_polynomial()) throw DomainError("divisor line with a non-polynomial value");
  return Poly::var(chart.coords[line.coord]) - line.value.num();
}

}  // namespace oppair::symbolic
