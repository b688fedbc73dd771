#include "oppair/config.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

#include "oppair/error.hpp"

namespace oppair {

Configuration::Configuration(std::vector<Component> components,
                             const std::vector<std::pair<std::string, std::string>>& edges)
    : components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].mult < 0)
      throw std::invalid_argument("component '" + components_[i].id + "' has negative multiplicity");
    for (std::size_t j = 0; j < i; ++j)
      if (components_[i].id == components_[j].id)
        throw std::invalid_argument("duplicate component id '" + components_[i].id + "'");
  }
  for (const auto& [a, b] : edges) {
    auto i = find(a), j = find(b);
    if (!i) throw std::invalid_argument("edge references unknown component '" + a + "'");
    if (!j) throw std::invalid_argument("edge references unknown component '" + b + "'");
    if (*i == *j) throw std::invalid_argument("self-loop on component '" + a + "'");
    add_edge_checked(*i, *j);
  }
}

void Configuration::add_edge_checked(std::size_t i, std::size_t j) {
  Edge e = std::minmax(i, j);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

std::optional<std::size_t> Configuration::find(std::string_view id) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].id == id) return i;
  return std::nullopt;
}

std::size_t Configuration::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw DomainError("unknown component '" + std::string(id) + "'");
}

bool Configuration::adjacent(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(std::minmax(i, j)));
}

std::vector<std::size_t> Configuration::neighbors(std::size_t i) const {
  std::vector<std::size_t> r;
  for (auto [a, b] : edges_) {
    if (a == i) r.push_back(b);
    if (b == i) r.push_back(a);
  }
  std::sort(r.begin(), r.end());
  return r;
}

lattice::IntMatrix Configuration::intersection_matrix() const {
  if (components_.empty()) throw DomainError("intersection matrix of an empty configuration");
  lattice::IntMatrix m(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) m.set(i, i, components_[i].self_int);
  for (auto [a, b] : edges_) m.set(a, b, 1);
  return m;
}

lattice::ClassVector Configuration::multiplicities() const {
  lattice::ClassVector v;
  v.reserve(components_.size());
  for (const auto& c : components_) v.push_back(c.mult);
  return v;
}

Configuration Configuration::y_part() const {
  Configuration r;
  std::vector<std::size_t> remap(components_.size(), SIZE_MAX);
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].mult >= 1) {
      remap[i] = r.components_.size();
      r.components_.push_back(components_[i]);
    }
  for (auto [a, b] : edges_)
    if (remap[a] != SIZE_MAX && remap[b] != SIZE_MAX) r.add_edge_checked(remap[a], remap[b]);
  return r;
}

Configuration Configuration::with_component(Component c) const {
  if (find(c.id)) throw DomainError("duplicate component id '" + c.id + "'");
  if (c.mult < 0) throw DomainError("negative multiplicity for '" + c.id + "'");
  Configuration r = *this;
  r.components_.push_back(std::move(c));
  return r;
}

Configuration Configuration::without_component(std::size_t i) const {
  Configuration r;
  r.components_ = components_;
  r.components_.erase(r.components_.begin() + static_cast<std::ptrdiff_t>(i));
  for (auto [a, b] : edges_) {
    if (a == i || b == i) continue;
    r.add_edge_checked(a > i ? a - 1 : a, b > i ? b - 1 : b);
  }
  return r;
}

Configuration Configuration::with_edge(std::size_t i, std::size_t j) const {
  if (i == j) throw DomainError("self-loop on component '" + components_[i].id + "'");
  Configuration r = *this;
  r.add_edge_checked(i, j);
  return r;
}

Configuration Configuration::without_edge(std::size_t i, std::size_t j) const {
  Configuration r = *this;
  std::erase(r.edges_, Edge(std::minmax(i, j)));
  return r;
}

Configuration Configuration::with_self_int(std::size_t i, int self_int) const {
  Configuration r = *this;
  r.components_[i].self_int = self_int;
  return r;
}

std::string Configuration::fresh_id(std::string_view prefix) const {
  for (std::size_t k = 1;; ++k) {
    std::string id = std::string(prefix) + std::to_string(k);
    if (!find(id)) return id;
  }
}

bool is_connected(const Configuration& c) {
  if (c.size() == 0) return false;
  std::vector<char> seen(c.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : c.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == c.size();
}

bool is_tree(const Configuration& c) {
  return c.size() > 0 && c.edges().size() + 1 == c.size() && is_connected(c);
}

bool AdjunctionReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok(); });
}

AdjunctionReport adjunction_check(const Configuration& c) {
  AdjunctionReport r;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int required = -2;
    if (c[i].mult == 0)
      for (auto j : c.neighbors(i)) required += c[j].mult;
    r.entries.push_back({c[i].id, c[i].self_int, required});
  }
  return r;
}

namespace {

struct TagInfo {
  KodairaTag tag;
  std::string_view token, dynkin, kodaira;
  Painleve painleve;
};

constexpr std::array<TagInfo, 10> kTags{{
    {KodairaTag::E8, "E8", "E~8", "II*", Painleve::PI},
    {KodairaTag::E7, "E7", "E~7", "III*", Painleve::PII},
    {KodairaTag::E6, "E6", "E~6", "IV*", Painleve::PIV},
    {KodairaTag::D4, "D4", "D~4", "I0*", Painleve::PVI},
    {KodairaTag::D5, "D5", "D~5", "I1*", Painleve::PV},
    {KodairaTag::D6, "D6", "D~6", "I2*", Painleve::PIII},
    {KodairaTag::D7, "D7", "D~7", "I3*", Painleve::PIIIStar},
    {KodairaTag::D8, "D8", "D~8", "I4*", Painleve::None},
    {KodairaTag::D9, "D9", "D~9", "I5*", Painleve::None},
    {KodairaTag::Unrecognized, "unrecognized", "unrecognized", "-", Painleve::None},
}};

const TagInfo& info(KodairaTag tag) {
  for (const auto& t : kTags)
    if (t.tag == tag) return t;
  return kTags.back();
}

}  // namespace

KodairaType kodaira_type(KodairaTag tag) { return {tag, info(tag).painleve}; }
std::string_view token(KodairaTag tag) { return info(tag).token; }
std::string_view dynkin_name(KodairaTag tag) { return info(tag).dynkin; }
std::string_view kodaira_notation(KodairaTag tag) { return info(tag).kodaira; }

std::string_view painleve_name(Painleve p) {
  switch (p) {
    case Painleve::PI: return "P_I";
    case Painleve::PII: return "P_II";
    case Painleve::PIIIStar: return "P_III*";
    case Painleve::PIII: return "P_III";
    case Painleve::PIV: return "P_IV";
    case Painleve::PV: return "P_V";
    case Painleve::PVI: return "P_VI";
    case Painleve::None: return "none";
  }
  return "none";
}

std::optional<KodairaTag> tag_from_token(std::string_view tok) {
  for (const auto& t : kTags)
    if (t.tag != KodairaTag::Unrecognized && t.token == tok) return t.tag;
  return std::nullopt;
}

bool is_admissible(KodairaTag tag) {
  return std::find(std::begin(kAdmissibleTags), std::end(kAdmissibleTags), tag) !=
         std::end(kAdmissibleTags);
}

// Component ids of the fibres:
//   D~n : chain c1..c(n-3) of mult 2; leaves l1, l2 on c1 and l3, l4 on the
//         last chain node (for D~4 all four leaves sit on c1).
//   E~6 : centre m (3); arms a2-a1, b2-b1, c2-c1 (mult 2, 1).
//   E~7 : long chain a1 a2 a3 m b3 b2 b1 (1 2 3 4 3 2 1), branch c2 (2) on m.
//   E~8 : chain n1..n6 (1..6), then p4 (4), p2 (2); branch b3 (3) on n6.
Configuration kodaira_fibre(KodairaTag tag) {
  std::vector<Component> cs;
  std::vector<std::pair<std::string, std::string>> es;
  auto node = [&](std::string id, int mult) { cs.push_back({std::move(id), -2, mult}); };
  auto edge = [&](std::string a, std::string b) { es.emplace_back(std::move(a), std::move(b)); };

  switch (tag) {
    case KodairaTag::D4: case KodairaTag::D5: case KodairaTag::D6: case KodairaTag::D7:
    case KodairaTag::D8: case KodairaTag::D9: {
      const int n = 4 + static_cast<int>(tag) - static_cast<int>(KodairaTag::D4);
      const int chain = n - 3;
      for (int k = 1; k <= chain; ++k) node("c" + std::to_string(k), 2);
      for (int k = 1; k < chain; ++k) edge("c" + std::to_string(k), "c" + std::to_string(k + 1));
      const std::string last = "c" + std::to_string(chain);
      for (int k = 1; k <= 4; ++k) node("l" + std::to_string(k), 1);
      edge("c1", "l1");
      edge("c1", "l2");
      edge(last, "l3");
      edge(last, "l4");
      break;
    }
    case KodairaTag::E6:
      node("m", 3);
      for (std::string arm : {"a", "b", "c"}) {
        node(arm + "2", 2);
        node(arm + "1", 1);
        edge("m", arm + "2");
        edge(arm + "2", arm + "1");
      }
      break;
    case KodairaTag::E7:
      node("m", 4);
      for (std::string arm : {"a", "b"}) {
        node(arm + "3", 3);
        node(arm + "2", 2);
        node(arm + "1", 1);
        edge("m", arm + "3");
        edge(arm + "3", arm + "2");
        edge(arm + "2", arm + "1");
      }
      node("c2", 2);
      edge("m", "c2");
      break;
    case KodairaTag::E8:
      for (int k = 1; k <= 6; ++k) node("n" + std::to_string(k), k);
      for (int k = 1; k < 6; ++k) edge("n" + std::to_string(k), "n" + std::to_string(k + 1));
      node("p4", 4);
      node("p2", 2);
      node("b3", 3);
      edge("n6", "p4");
      edge("p4", "p2");
      edge("n6", "b3");
      break;
    case KodairaTag::Unrecognized:
      throw DomainError("no fibre for an unrecognized Kodaira type");
  }
  return Configuration(std::move(cs), es);
}

KodairaType recognize_kodaira(const Configuration& y) {
  static const std::vector<std::pair<KodairaTag, std::string>> keys = [] {
    std::vector<std::pair<KodairaTag, std::string>> r;
    for (const auto& t : kTags)
      if (t.tag != KodairaTag::Unrecognized) r.emplace_back(t.tag, canonical_key(kodaira_fibre(t.tag)));
    return r;
  }();
  if (y.empty()) return {};
  const std::string key = canonical_key(y);
  for (const auto& [tag, k] : keys)
    if (k == key) return kodaira_type(tag);
  return {};
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

ValidationReport validate_op_pair(const Configuration& f) {
  ValidationReport r;
  auto add = [&](std::string name, bool passed, std::string detail) {
    r.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  const bool count_ok = f.size() == 10;
  add("component-count", count_ok,
      count_ok ? "10 components" : "component-count ≠ 10 (found " + std::to_string(f.size()) + ")");

  const bool tree = is_tree(f);
  add("tree", tree, tree ? "connected and acyclic" : "dual graph is not a tree");

  const auto adj = adjunction_check(f);
  std::string adj_detail;
  for (const auto& e : adj.entries)
    if (!e.ok())
      adj_detail += (adj_detail.empty() ? "" : "; ") + e.id + " has self-intersection " +
                    std::to_string(e.self_int) + ", adjunction requires " + std::to_string(e.required);
  add("adjunction", adj.ok(), adj.ok() ? "all components satisfy adjunction" : adj_detail);

  const Configuration y = f.y_part();
  const bool y_connected = !y.empty() && is_connected(y);
  const KodairaType kt = y_connected ? recognize_kodaira(y) : KodairaType{};
  const bool kt_ok = y_connected && is_admissible(kt.tag);
  std::string kt_detail;
  if (y.empty()) kt_detail = "no component of positive multiplicity";
  else if (!y_connected) kt_detail = "Y is not connected";
  else if (kt.tag == KodairaTag::Unrecognized) kt_detail = "Y matches no Kodaira fibre";
  else
    kt_detail = std::string(dynkin_name(kt.tag)) + " / " + std::string(kodaira_notation(kt.tag)) +
                (kt_ok ? "" : " is not admissible");
  add("kodaira-type", kt_ok, kt_detail);

  const bool has_one = std::any_of(f.components().begin(), f.components().end(),
                                   [](const Component& c) { return c.mult == 1; });
  add("multiplicity-one", has_one,
      has_one ? "some component has multiplicity 1" : "no component of multiplicity 1");

  if (f.empty()) {
    add("unimodular-signature", false, "empty configuration");
  } else {
    const auto m = f.intersection_matrix();
    const auto det = lattice::determinant(m);
    const auto sig = lattice::signature(m);
    const bool ok = (det == 1 || det == -1) && sig == lattice::Signature{1, 0, 9};
    add("unimodular-signature", ok,
        "det " + det.get_str() + ", signature (" + std::to_string(sig.positive) + ", " +
            std::to_string(sig.zero) + ", " + std::to_string(sig.negative) + ")");
  }
  return r;
}

namespace {

struct Canonizer {
  std::size_t n;
  std::vector<std::vector<char>> adj;
  std::vector<std::vector<std::size_t>> nbrs;
  std::vector<std::pair<int, int>> label;  // (self_int, mult)
  std::vector<int> best_key;
  std::vector<std::size_t> best_order;

  // Iterated colour refinement. Colours stay ordered consistently with the
  // input colouring, so the procedure commutes with relabelling.
  std::vector<int> refine(std::vector<int> colour) const {
    std::size_t classes = 0;
    while (true) {
      std::vector<std::vector<int>> sig(n);
      for (std::size_t v = 0; v < n; ++v) {
        sig[v].push_back(colour[v]);
        std::vector<int> around;
        for (auto w : nbrs[v]) around.push_back(colour[w]);
        std::sort(around.begin(), around.end());
        sig[v].insert(sig[v].end(), around.begin(), around.end());
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (std::size_t v = 0; v < n; ++v)
        colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
      if (sorted.size() == classes) return colour;
      classes = sorted.size();
    }
  }

  void leaf(const std::vector<int>& colour) {
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[static_cast<std::size_t>(colour[v])] = v;
    std::vector<int> key;
    key.reserve(2 * n + n * n / 2);
    for (auto v : order) {
      key.push_back(label[v].first);
      key.push_back(label[v].second);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) key.push_back(adj[order[i]][order[j]]);
    if (best_order.empty() || key < best_key) {
      best_key = std::move(key);
      best_order = std::move(order);
    }
  }

  void search(std::vector<int> colour) {
    colour = refine(std::move(colour));
    std::vector<int> count(n, 0);
    for (auto c : colour) count[static_cast<std::size_t>(c)]++;
    int cell = -1;
    for (std::size_t c = 0; c < n; ++c)
      if (count[c] > 1) {
        cell = static_cast<int>(c);
        break;
      }
    if (cell < 0) {
      leaf(colour);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (colour[v] != cell) continue;
      std::vector<int> next(n);
      for (std::size_t u = 0; u < n; ++u) next[u] = 2 * colour[u] + (colour[u] == cell && u != v ? 1 : 0);
      search(std::move(next));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Configuration& c) {
  Canonizer k;
  k.n = c.size();
  if (k.n == 0) return {"0|", {}};
  k.adj.assign(k.n, std::vector<char>(k.n, 0));
  k.nbrs.resize(k.n);
  for (auto [a, b] : c.edges()) {
    k.adj[a][b] = k.adj[b][a] = 1;
    k.nbrs[a].push_back(b);
    k.nbrs[b].push_back(a);
  }
  for (const auto& comp : c.components()) k.label.emplace_back(comp.self_int, comp.mult);

  auto labels = k.label;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<int> colour(k.n);
  for (std::size_t v = 0; v < k.n; ++v)
    colour[v] = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), k.label[v]) - labels.begin());
  k.search(std::move(colour));

  std::string key = std::to_string(k.n) + "|";
  for (std::size_t i = 0; i < k.n; ++i) {
    key += std::to_string(k.best_key[2 * i]) + ":" + std::to_string(k.best_key[2 * i + 1]);
    key += i + 1 < k.n ? "," : "|";
  }
  for (std::size_t i = 2 * k.n; i < k.best_key.size(); ++i) key += k.best_key[i] ? '1' : '0';
  return {std::move(key), std::move(k.best_order)};
}

}  // namespace oppair
