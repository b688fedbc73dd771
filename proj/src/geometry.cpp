#include "oppair/geometry.hpp"

#include "oppair/error.hpp"

namespace oppair::geometry {

std::string describe(const ModelSpec& spec) {
  switch (spec.kind) {
    case MinimalModel::P2: return "P2, 3h";
    case MinimalModel::Fn: {
      const std::string n = std::to_string(spec.n);
      return "F" + n + ", 2s0+" + std::to_string(spec.n + 2) + "f";
    }
    case MinimalModel::F2SInfinity: return "F2, 2s_inf";
  }
  return "?";
}

std::string describe(const BirationalStep& step) {
  std::string where;
  for (const auto& t : step.targets) where += (where.empty() ? "" : ", ") + t;
  switch (step.kind) {
    case StepKind::BlowupSmoothPoint:
      return "blow up a point of " + where + " -> " + step.component + " (mult " +
             std::to_string(step.multiplicity) + ")";
    case StepKind::BlowupNode:
      return "blow up the node " + where + " -> " + step.component + " (mult " +
             std::to_string(step.multiplicity) + ")";
    case StepKind::Blowdown:
      return "contract " + step.component + " (mult " + std::to_string(step.multiplicity) + ")" +
             (where.empty() ? "" : " meeting " + where);
  }
  return "?";
}

Configuration blowup(const Configuration& c, const Center& center, BirationalStep* record,
                     const std::string& new_id) {
  const std::string id = new_id.empty() ? c.fresh_id("E") : new_id;
  if (c.find(id)) throw DomainError("component id '" + id + "' already in use");

  if (center.kind == Center::Kind::SmoothPoint) {
    const std::size_t i = c.index_of(center.first);
    const int m = c[i].mult - 1;
    if (m < 0)
      throw DomainError("centre on " + center.first + " is not on the anti-canonical divisor");
    Configuration r = c.with_self_int(i, c[i].self_int - 1).with_component({id, -1, m});
    r = r.with_edge(i, r.size() - 1);
    if (record) *record = {StepKind::BlowupSmoothPoint, {center.first}, id, m};
    return r;
  }

  const std::size_t i = c.index_of(center.first);
  const std::size_t j = c.index_of(center.second);
  if (!c.adjacent(i, j))
    throw DomainError(center.first + " and " + center.second + " do not meet");
  const int m = c[i].mult + c[j].mult - 1;
  if (m < 0)
    throw DomainError("node " + center.first + "/" + center.second +
                      " is not on the anti-canonical divisor");
  Configuration r = c.with_self_int(i, c[i].self_int - 1);
  r = r.with_self_int(j, r[j].self_int - 1).without_edge(i, j).with_component({id, -1, m});
  r = r.with_edge(i, r.size() - 1).with_edge(j, r.size() - 1);
  if (record) *record = {StepKind::BlowupNode, {center.first, center.second}, id, m};
  return r;
}

std::string blowdown_obstruction(const Configuration& c, std::size_t e) {
  if (c[e].self_int != -1)
    return c[e].id + " has self-intersection " + std::to_string(c[e].self_int) + ", not -1";
  const auto nb = c.neighbors(e);
  if (nb.size() >= 3) return c[e].id + " meets " + std::to_string(nb.size()) + " components";
  if (nb.size() == 2 && c.adjacent(nb[0], nb[1]))
    return "the neighbours of " + c[e].id + " already meet";
  int sum = 0;
  for (auto k : nb) sum += c[k].mult;
  if (c[e].mult != sum - 1)
    return c[e].id + " has multiplicity " + std::to_string(c[e].mult) +
           " but its neighbours force " + std::to_string(sum - 1);
  return {};
}

Configuration blowdown(const Configuration& c, const std::string& id, BirationalStep* record) {
  const std::size_t e = c.index_of(id);
  if (auto why = blowdown_obstruction(c, e); !why.empty()) throw DomainError("cannot contract: " + why);
  const auto nb = c.neighbors(e);
  Configuration r = c;
  for (auto k : nb) r = r.with_self_int(k, r[k].self_int + 1);
  if (nb.size() == 2) r = r.with_edge(nb[0], nb[1]);
  if (record) {
    *record = {StepKind::Blowdown, {}, id, c[e].mult};
    for (auto k : nb) record->targets.push_back(c[k].id);
  }
  return r.without_component(e);
}

Configuration apply(const Configuration& c, const BirationalStep& step) {
  switch (step.kind) {
    case StepKind::BlowupSmoothPoint:
      return blowup(c, Center::smooth_point(step.targets.at(0)), nullptr, step.component);
    case StepKind::BlowupNode:
      return blowup(c, Center::node(step.targets.at(0), step.targets.at(1)), nullptr, step.component);
    case StepKind::Blowdown:
      return blowdown(c, step.component);
  }
  throw DomainError("unknown step kind");
}

Configuration minimal_configuration(const ModelSpec& spec) {
  switch (spec.kind) {
    case MinimalModel::P2:
      return Configuration({{"h", 1, 3}}, {});
    case MinimalModel::Fn:
      if (spec.n < 0) throw DomainError("Hirzebruch index must be non-negative");
      return Configuration({{"s0", -spec.n, 2}, {"f", 0, spec.n + 2}}, {{"s0", "f"}});
    case MinimalModel::F2SInfinity:
      if (spec.with_fibre) return Configuration({{"s_inf", 2, 2}, {"f", 0, 0}}, {{"s_inf", "f"}});
      return Configuration({{"s_inf", 2, 2}}, {});
  }
  throw DomainError("unknown minimal model");
}

SurfacePair minimal_pair(const ModelSpec& spec) { return {spec, minimal_configuration(spec)}; }

SurfacePair blowup(const SurfacePair& pair, const Center& center) {
  BirationalStep step;
  Configuration c = blowup(pair.config(), center, &step);
  auto history = pair.history();
  history.push_back(std::move(step));
  return {pair.origin(), std::move(c), std::move(history)};
}

SurfacePair blowdown(const SurfacePair& pair, const std::string& id) {
  BirationalStep step;
  Configuration c = blowdown(pair.config(), id, &step);
  auto history = pair.history();
  history.push_back(std::move(step));
  return {pair.origin(), std::move(c), std::move(history)};
}

Configuration replay(const SurfacePair& pair) {
  Configuration c = minimal_configuration(pair.origin());
  for (const auto& step : pair.history()) c = apply(c, step);
  return c;
}

long euler_number(const Configuration& c) {
  return 2 + static_cast<long>(lattice::rank(c.intersection_matrix()));
}

long canonical_square(const Configuration& c) {
  const auto m = c.multiplicities();
  return lattice::pairing(c.intersection_matrix(), m, m).get_si();
}

}  // namespace oppair::geometry
