#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oppair/lattice.hpp"

namespace oppair {

struct Component {
  std::string id;
  int self_int = 0;
  int mult = 0;  // 0 marks an additional component
  bool operator==(const Component&) const = default;
};

using Edge = std::pair<std::size_t, std::size_t>;  // always first < second

// Weighted dual graph. Components keep insertion order; edges are simple and
// stored sorted, so two values built from the same data compare equal.
class Configuration {
 public:
  Configuration() = default;
  Configuration(std::vector<Component> components,
                const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  const std::vector<Component>& components() const { return components_; }
  const Component& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;  // throws DomainError
  bool adjacent(std::size_t i, std::size_t j) const;
  std::vector<std::size_t> neighbors(std::size_t i) const;
  std::size_t degree(std::size_t i) const { return neighbors(i).size(); }

  lattice::IntMatrix intersection_matrix() const;
  lattice::ClassVector multiplicities() const;

  // Sub-configuration of the components with mult >= 1.
  Configuration y_part() const;

  // Value-style edits; each returns a new configuration.
  Configuration with_component(Component c) const;
  Configuration without_component(std::size_t i) const;
  Configuration with_edge(std::size_t i, std::size_t j) const;
  Configuration without_edge(std::size_t i, std::size_t j) const;
  Configuration with_self_int(std::size_t i, int self_int) const;

  // Fresh id of the form prefix<k>, k >= 1, not used by any component.
  std::string fresh_id(std::string_view prefix) const;

  bool operator==(const Configuration&) const = default;

 private:
  std::vector<Component> components_;
  std::vector<Edge> edges_;

  void add_edge_checked(std::size_t i, std::size_t j);
};

bool is_tree(const Configuration& c);
bool is_connected(const Configuration& c);

struct AdjunctionEntry {
  std::string id;
  int self_int = 0;
  int required = 0;
  bool ok() const { return self_int == required; }
};

struct AdjunctionReport {
  std::vector<AdjunctionEntry> entries;
  bool ok() const;
};

// mult >= 1 requires self-intersection -2; an additional component C requires
// C^2 = C.Y - 2 with C.Y the sum of its neighbours' multiplicities.
AdjunctionReport adjunction_check(const Configuration& c);

enum class KodairaTag { E8, E7, E6, D4, D5, D6, D7, D8, D9, Unrecognized };
enum class Painleve { PI, PII, PIIIStar, PIII, PIV, PV, PVI, None };

struct KodairaType {
  KodairaTag tag = KodairaTag::Unrecognized;
  Painleve painleve = Painleve::None;
  bool operator==(const KodairaType&) const = default;
};

KodairaType kodaira_type(KodairaTag tag);
std::string_view token(KodairaTag tag);          // "E8", "D4", ...
std::string_view dynkin_name(KodairaTag tag);    // "E~8", "D~4", ...
std::string_view kodaira_notation(KodairaTag tag);  // "II*", "I0*", ...
std::string_view painleve_name(Painleve p);     // "P_I", "P_III*", ...
std::optional<KodairaTag> tag_from_token(std::string_view token);
bool is_admissible(KodairaTag tag);  // the seven types that occur

inline constexpr KodairaTag kAdmissibleTags[] = {KodairaTag::D4, KodairaTag::D5, KodairaTag::D6,
                                                 KodairaTag::D7, KodairaTag::E6, KodairaTag::E7,
                                                 KodairaTag::E8};

// The Kodaira fibre of a tag as a configuration (all -2, standard
// multiplicities). Ids are stable and documented in config.cpp.
Configuration kodaira_fibre(KodairaTag tag);

KodairaType recognize_kodaira(const Configuration& y);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

ValidationReport validate_op_pair(const Configuration& f);

struct CanonicalForm {
  std::string key;
  // order[k] is the index of the component at canonical position k.
  std::vector<std::size_t> order;
};

CanonicalForm canonical_form(const Configuration& c);
inline std::string canonical_key(const Configuration& c) { return canonical_form(c).key; }

}  // namespace oppair
