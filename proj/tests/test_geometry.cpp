#include <gtest/gtest.h>

#include <random>

#include "oppair/error.hpp"
#include "oppair/geometry.hpp"
#include "support.hpp"

using namespace oppair;
using namespace oppair::geometry;
using oppair::testing::all_golden;

namespace {

const ModelSpec kSpanning[] = {
    {MinimalModel::P2, 0, false},           {MinimalModel::Fn, 0, false}, {MinimalModel::Fn, 1, false},
    {MinimalModel::Fn, 2, false},           {MinimalModel::Fn, 3, false}, {MinimalModel::Fn, 4, false},
    {MinimalModel::F2SInfinity, 2, true},
};

// Every admissible centre of c.
std::vector<Center> centres(const Configuration& c) {
  std::vector<Center> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i].mult >= 1) out.push_back(Center::smooth_point(c[i].id));
  for (const auto& [a, b] : c.edges())
    if (c[a].mult + c[b].mult >= 1) out.push_back(Center::node(c[a].id, c[b].id));
  return out;
}

long y_square(const Configuration& c) {
  const auto m = c.intersection_matrix();
  const auto v = c.multiplicities();
  long s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) s += v[i] * m(i, j) * v[j];
  return s;
}

}  // namespace

TEST(Geometry, MinimalModels) {
  EXPECT_EQ(describe(ModelSpec{MinimalModel::P2, 0, false}), "P2, 3h");
  EXPECT_EQ(describe(ModelSpec{MinimalModel::Fn, 0, false}), "F0, 2s0+2f");
  EXPECT_EQ(describe(ModelSpec{MinimalModel::F2SInfinity, 2, false}), "F2, 2s_inf");
  for (const auto& spec : kSpanning) {
    const Configuration c = minimal_configuration(spec);
    EXPECT_EQ(euler_number(c) + canonical_square(c), 12) << describe(spec);
    EXPECT_EQ(canonical_square(c), 8 + (spec.kind == MinimalModel::P2));
  }
  // s_inf alone does not span Pic(F2).
  const Configuration bare = minimal_configuration({MinimalModel::F2SInfinity, 2, false});
  EXPECT_EQ(euler_number(bare), 3);
  EXPECT_THROW(minimal_configuration({MinimalModel::Fn, -1, false}), DomainError);
}

TEST(Geometry, BlowupBookkeeping) {
  const Configuration f0 = minimal_configuration({MinimalModel::Fn, 0, false});
  BirationalStep step;
  const Configuration a = blowup(f0, Center::smooth_point("s0"), &step);
  EXPECT_EQ(step.kind, StepKind::BlowupSmoothPoint);
  EXPECT_EQ(step.component, "E1");
  EXPECT_EQ(step.multiplicity, 1);
  EXPECT_EQ(a[a.index_of("s0")].self_int, -1);
  EXPECT_EQ(a[a.index_of("E1")].self_int, -1);
  EXPECT_TRUE(a.adjacent(a.index_of("s0"), a.index_of("E1")));

  const Configuration b = blowup(f0, Center::node("s0", "f"), &step);
  EXPECT_EQ(step.multiplicity, 3);
  EXPECT_FALSE(b.adjacent(b.index_of("s0"), b.index_of("f")));
  EXPECT_EQ(b.degree(b.index_of("E1")), 2u);

  EXPECT_THROW(blowup(a, Center::node("E1", "f")), DomainError);  // not adjacent
  const Configuration p2 = minimal_configuration({MinimalModel::P2, 0, false});
  const Configuration c0 = blowup(blowup(blowup(p2, Center::smooth_point("h")), Center::smooth_point("E1")),
                                  Center::smooth_point("E2"));
  EXPECT_EQ(c0[c0.index_of("E3")].mult, 0);
  EXPECT_THROW(blowup(c0, Center::smooth_point("E3")), DomainError);  // off the divisor
}

TEST(Geometry, BlowdownRule) {
  const Configuration f0 = minimal_configuration({MinimalModel::Fn, 0, false});
  const Configuration a = blowup(f0, Center::node("s0", "f"));
  EXPECT_TRUE(blowdown_obstruction(a, a.index_of("E1")).empty());
  EXPECT_TRUE(blowdown_obstruction(a, a.index_of("s0")).empty());
  EXPECT_FALSE(blowdown_obstruction(f0, f0.index_of("s0")).empty());  // s0^2 = 0
  // Wrong multiplicity on an otherwise contractible curve.
  const Configuration c({{"a", -2, 2}, {"e", -1, 0}}, {{"a", "e"}});
  EXPECT_FALSE(blowdown_obstruction(c, 1).empty());
  EXPECT_THROW(blowdown(c, "e"), DomainError);
  // Two neighbours that already meet.
  const Configuration tri({{"a", 0, 1}, {"b", 0, 1}, {"e", -1, 1}}, {{"a", "b"}, {"a", "e"}, {"b", "e"}});
  EXPECT_FALSE(blowdown_obstruction(tri, 2).empty());
}

TEST(Geometry, BlowupThenBlowdownIsIdentityOnGolden) {
  std::size_t trips = 0;
  for (const auto& e : all_golden()) {
    for (const auto& centre : centres(e.config)) {
      BirationalStep up;
      const Configuration b = blowup(e.config, centre, &up);
      EXPECT_EQ(canonical_square(b), canonical_square(e.config) - 1);
      EXPECT_EQ(lattice::determinant(b.intersection_matrix()), -lattice::determinant(e.config.intersection_matrix()));
      const Configuration back = blowdown(b, up.component);
      EXPECT_EQ(back, e.config) << e.label << " " << up.component;
      ++trips;
    }
  }
  EXPECT_GT(trips, 28u * 10);
}

TEST(Geometry, NoetherAlongRandomTowers) {
  std::mt19937 rng(2024);
  for (const auto& spec : kSpanning) {
    for (int tower = 0; tower < 60; ++tower) {
      SurfacePair pair = minimal_pair(spec);
      const int depth = 1 + tower % 8;
      for (int step = 0; step < depth; ++step) {
        const auto options = centres(pair.config());
        ASSERT_FALSE(options.empty());
        const Center c = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        const long k2 = y_square(pair.config());
        const auto before = pair.config().size();
        pair = blowup(pair, c);
        const Configuration& now = pair.config();
        EXPECT_EQ(euler_number(now) + canonical_square(now), 12) << describe(spec) << " depth " << step;
        EXPECT_EQ(y_square(now), k2 - 1);
        EXPECT_EQ(canonical_square(now), y_square(now));
        EXPECT_EQ(now.size(), before + 1);
        // Exceptional multiplicity: m - 1 at a smooth point, m1 + m2 - 1 at a node.
        const auto& made = pair.history().back();
        int expected = -1;
        for (const auto& t : made.targets) expected += now[now.index_of(t)].mult;
        EXPECT_EQ(made.multiplicity, expected);
      }
      EXPECT_EQ(replay(pair), pair.config());
    }
  }
}

// Eight blowups of (F0, 2s0 + 2f) produce the D~7 pair.
TEST(Geometry, D7FromF0) {
  SurfacePair p = minimal_pair({MinimalModel::Fn, 0, false});
  for (const Center& c : {Center::smooth_point("s0"), Center::smooth_point("f"), Center::node("s0", "E1"),
                          Center::node("f", "E2"), Center::smooth_point("E3"), Center::smooth_point("E4"),
                          Center::smooth_point("E5"), Center::smooth_point("E6")})
    p = blowup(p, c);
  ASSERT_EQ(p.history().size(), 8u);
  const auto& d7 = classify::golden_list().at(KodairaTag::D7).at(0).config;
  EXPECT_EQ(canonical_key(p.config()), canonical_key(d7));
  EXPECT_TRUE(validate_op_pair(p.config()).ok());
}

TEST(Geometry, DescribeSteps) {
  BirationalStep s{StepKind::Blowdown, {"a", "b"}, "e", 1};
  EXPECT_EQ(describe(s), "contract e (mult 1) meeting a, b");
  s = {StepKind::BlowupNode, {"a", "b"}, "E2", 3};
  EXPECT_EQ(describe(s), "blow up the node a, b -> E2 (mult 3)");
}
