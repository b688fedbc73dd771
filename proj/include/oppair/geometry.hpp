#pragma once

#include <string>
#include <vector>

#include "oppair/config.hpp"

namespace oppair::geometry {

enum class MinimalModel { P2, Fn, F2SInfinity };

struct ModelSpec {
  MinimalModel kind = MinimalModel::P2;
  int n = 0;                  // Hirzebruch index for Fn
  bool with_fibre = false;    // F2SInfinity: also carry a fibre f (0, mult 0)
  bool operator==(const ModelSpec&) const = default;
};

std::string describe(const ModelSpec& spec);  // "P2, 3h", "F0, 2s0+2f", ...

// Blowup centre. Points are combinatorial: SmoothPoint(i) is a point of C_i
// away from every node, Node(i, j) is the intersection point of C_i and C_j.
struct Center {
  enum class Kind { SmoothPoint, Node } kind = Kind::SmoothPoint;
  std::string first;
  std::string second;  // Node only

  static Center smooth_point(std::string id) { return {Kind::SmoothPoint, std::move(id), {}}; }
  static Center node(std::string a, std::string b) { return {Kind::Node, std::move(a), std::move(b)}; }
  bool operator==(const Center&) const = default;
};

enum class StepKind { BlowupSmoothPoint, BlowupNode, Blowdown };

struct BirationalStep {
  StepKind kind = StepKind::Blowdown;
  std::vector<std::string> targets;  // centre components, or neighbours of the contracted curve
  std::string component;             // created or contracted component
  int multiplicity = 0;              // multiplicity of that component in -K
  bool operator==(const BirationalStep&) const = default;
};

std::string describe(const BirationalStep& step);

// Configuration-level surgery, used directly by the search code.
// new_id empty means "next free E<k>".
Configuration blowup(const Configuration& c, const Center& center, BirationalStep* record = nullptr,
                     const std::string& new_id = {});
Configuration blowdown(const Configuration& c, const std::string& id, BirationalStep* record = nullptr);

// Why `id` cannot be contracted, or empty if it can.
std::string blowdown_obstruction(const Configuration& c, std::size_t index);

// Apply one recorded step (replay). Blowup steps reuse the recorded id.
Configuration apply(const Configuration& c, const BirationalStep& step);

class SurfacePair {
 public:
  SurfacePair(ModelSpec origin, Configuration config, std::vector<BirationalStep> history = {})
      : origin_(origin), config_(std::move(config)), history_(std::move(history)) {}

  const ModelSpec& origin() const { return origin_; }
  const Configuration& config() const { return config_; }
  const std::vector<BirationalStep>& history() const { return history_; }

 private:
  ModelSpec origin_;
  Configuration config_;
  std::vector<BirationalStep> history_;
};

Configuration minimal_configuration(const ModelSpec& spec);
SurfacePair minimal_pair(const ModelSpec& spec);
SurfacePair blowup(const SurfacePair& pair, const Center& center);
SurfacePair blowdown(const SurfacePair& pair, const std::string& id);
Configuration replay(const SurfacePair& pair);

// e = 2 + rank(I), K^2 = Y.Y. Their sum is 12 on every rational pair whose
// components span the Picard lattice.
long euler_number(const Configuration& c);
long canonical_square(const Configuration& c);

}  // namespace oppair::geometry
