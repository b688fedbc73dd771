#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "oppair/geometry.hpp"
#include "oppair/symbolic/chart.hpp"

namespace oppair::symbolic {

// The coordinate line {coords[coord] = value} of a chart, lying on `component`.
struct DivisorLine {
  int coord = 0;
  RationalFn value;
  std::string component;
};

struct Chart {
  std::string name;
  Coords coords;
  std::vector<DivisorLine> lines;
  Pair to_reference;   // reference-chart coordinates in terms of coords
  std::string parent;  // empty for charts of the base surface
};

// Sigma^(2)_(eps) glued from four affine planes U0..U3:
//   x0 = x1,   y0 = 1/y1
//   x0 = 1/x2, y0 = x2 (eps - x2 y2)
//   x2 = x3,   y2 = 1/y3
// Returns (x0, y0) in terms of the coordinates of U_i.
Pair sigma2_to_u0(int chart, const RationalFn& eps);
Coords base_coords(int chart);  // (x_i, y_i)

struct BaseSurface {
  std::string name;
  std::vector<Chart> charts;
  std::string reference;  // the 2-form is dX ^ dY in this chart's coordinates
  geometry::ModelSpec model;
};

// "Sigma2_eps": eps symbolic, reference U0, divisor 2 s_inf with the fibre
// f = {x2 = 0} as an additional component.
// "F2": eps = 0, reference U1, divisor 2 s0 + 4 f.
BaseSurface base_surface(std::string_view name);

struct TowerCenter {
  std::string chart;
  std::array<std::string, 2> point;
};

struct TowerSpec {
  std::string base;
  std::vector<TowerCenter> centers;
};

TowerSpec parse_tower_spec(std::string_view json_text);  // throws ParseError
nlohmann::json to_json(const TowerSpec& spec);
TowerSpec d4_tower_spec();
TowerSpec e8_tower_spec();

struct Tower {
  BaseSurface base;
  std::vector<Chart> charts;    // base charts, then Zw<k>, zW<k> for each centre k
  std::vector<ChartMap> maps;   // composite maps from the base chart to each new chart
  std::vector<ChartMap> local;  // parent chart -> new chart
  geometry::SurfacePair pair;

  const Chart& chart(std::string_view name) const;
  const ChartMap& map(std::string_view name) const;
};

// Blow up the listed centres in order. The k-th centre creates component E<k>
// and charts Zw<k> = ((a-p)/(b-q), b-q) and zW<k> = (a-p, (b-q)/(a-p)).
// A centre on no visible divisor line is an error.
Tower replay_blowup_tower(const TowerSpec& spec);

// Scalar factor of the transported 2-form: omega = J d(c1) ^ d(c2).
RationalFn form_factor(const Chart& chart);
Poly line_polynomial(const Chart& chart, const DivisorLine& line);

}  // namespace oppair::symbolic
