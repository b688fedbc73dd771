#include "oppair/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "oppair/error.hpp"

namespace oppair::classify {

std::size_t additional_count(KodairaTag tag) {
  if (tag == KodairaTag::Unrecognized) throw DomainError("unrecognized Kodaira type");
  const std::size_t r = kodaira_fibre(tag).size();
  return r >= 10 ? 0 : 10 - r;
}

bool parity_obstruction(const Configuration& c, const std::string& f1, const std::string& f2,
                        const std::string& f3) {
  const std::size_t a = c.index_of(f1), b = c.index_of(f2), k = c.index_of(f3);
  if (a == b) throw DomainError("parity obstruction needs two distinct components");
  const std::vector<std::size_t> only{k};
  if (c.neighbors(a) != only || c.neighbors(b) != only)
    throw DomainError(f1 + " and " + f2 + " must both meet only " + f3);
  return c[a].self_int % 2 == 0 && c[b].self_int % 2 == 0;
}

bool has_parity_obstruction(const Configuration& c) {
  std::map<std::size_t, int> even_leaves;  // hub -> count of even leaves hanging off it
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto nb = c.neighbors(i);
    if (nb.size() == 1 && c[i].self_int % 2 == 0 && ++even_leaves[nb[0]] >= 2) return true;
  }
  return false;
}

bool hodge_exclusion(const Configuration& c) {
  int count = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].mult != 0) continue;
    for (auto j : c.neighbors(i))
      if (c[j].mult >= 2) {
        ++count;
        break;
      }
  }
  return count >= 2;
}

std::vector<lattice::Integer> d8_attachment_determinants() {
  const Configuration y = kodaira_fibre(KodairaTag::D8);
  std::vector<lattice::Integer> dets;
  for (std::size_t v = 0; v < y.size(); ++v) {
    Configuration f = y.with_component({"C", y[v].mult - 2, 0});
    f = f.with_edge(v, f.size() - 1);
    dets.push_back(lattice::determinant(f.intersection_matrix()));
  }
  return dets;
}

std::string terminal_name(Terminal t) { return geometry::describe(terminal_model(t)); }

geometry::ModelSpec terminal_model(Terminal t) {
  switch (t) {
    case Terminal::P2: return {geometry::MinimalModel::P2, 0, false};
    case Terminal::F0: return {geometry::MinimalModel::Fn, 0, false};
    case Terminal::F2: return {geometry::MinimalModel::F2SInfinity, 2, false};
  }
  return {};
}

std::optional<Terminal> match_terminal(const Configuration& c) {
  using geometry::MinimalModel;
  static const std::vector<std::pair<std::string, Terminal>> keys = {
      {canonical_key(geometry::minimal_configuration({MinimalModel::P2, 0, false})), Terminal::P2},
      {canonical_key(geometry::minimal_configuration({MinimalModel::Fn, 0, false})), Terminal::F0},
      {canonical_key(geometry::minimal_configuration({MinimalModel::F2SInfinity, 2, false})), Terminal::F2},
      {canonical_key(geometry::minimal_configuration({MinimalModel::F2SInfinity, 2, true})), Terminal::F2},
  };
  if (c.size() > 2) return std::nullopt;
  const auto key = canonical_key(c);
  for (const auto& [k, t] : keys)
    if (k == key) return t;
  return std::nullopt;
}

std::size_t BlowdownPath::contractions() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const auto& s) {
    return s.kind == geometry::StepKind::Blowdown;
  }));
}

std::size_t BlowdownPath::blowups() const { return steps.size() - contractions(); }

Configuration replay_path(const Configuration& c, const BlowdownPath& path) {
  Configuration r = c;
  for (const auto& step : path.steps) r = geometry::apply(r, step);
  return r;
}

// Depth-first search over legal contractions, then (iterative deepening)
// over a bounded number of extra blowups at points of Y. Failures are
// memoised on the canonical key with the largest budget that failed.
struct PathSearcher::Impl {
  SearchOptions options;
  std::unordered_map<std::string, int> failed;

  bool known_dead(const std::string& key, int budget) const {
    auto it = failed.find(key);
    return it != failed.end() && it->second >= budget;
  }

  void mark_dead(const std::string& key, int budget) {
    auto [it, inserted] = failed.emplace(key, budget);
    if (!inserted) it->second = std::max(it->second, budget);
  }

  bool dfs(const Configuration& c, int budget, std::vector<geometry::BirationalStep>& steps,
           Terminal& terminal) {
    if (auto t = match_terminal(c)) {
      terminal = *t;
      return true;
    }
    const CanonicalForm cf = canonical_form(c);
    if (known_dead(cf.key, budget)) return false;

    // Contractions first, smallest canonical position first.
    for (auto v : cf.order) {
      if (!geometry::blowdown_obstruction(c, v).empty()) continue;
      geometry::BirationalStep step;
      Configuration next = geometry::blowdown(c, c[v].id, &step);
      steps.push_back(step);
      if (dfs(next, budget, steps, terminal)) return true;
      steps.pop_back();
    }

    if (budget > 0) {
      std::vector<geometry::Center> centres;
      for (auto v : cf.order)
        if (c[v].mult >= 1) centres.push_back(geometry::Center::smooth_point(c[v].id));
      for (std::size_t a = 0; a < cf.order.size(); ++a)
        for (std::size_t b = a + 1; b < cf.order.size(); ++b) {
          const auto i = cf.order[a], j = cf.order[b];
          if (c.adjacent(i, j) && c[i].mult + c[j].mult >= 1)
            centres.push_back(geometry::Center::node(c[i].id, c[j].id));
        }
      for (const auto& centre : centres) {
        geometry::BirationalStep step;
        Configuration next = geometry::blowup(c, centre, &step);
        steps.push_back(step);
        if (dfs(next, budget - 1, steps, terminal)) return true;
        steps.pop_back();
      }
    }

    mark_dead(cf.key, budget);
    return false;
  }
};

PathSearcher::PathSearcher(SearchOptions options) : impl_(new Impl{options, {}}) {}
PathSearcher::~PathSearcher() { delete impl_; }

std::optional<BlowdownPath> PathSearcher::find(const Configuration& c) {
  if (c.empty()) return std::nullopt;
  for (int budget = 0; budget <= impl_->options.max_blowups; ++budget) {
    BlowdownPath path;
    if (impl_->dfs(c, budget, path.steps, path.terminal)) return path;
  }
  return std::nullopt;
}

std::optional<BlowdownPath> find_blowdown_path(const Configuration& c, SearchOptions options) {
  PathSearcher searcher(options);
  return searcher.find(c);
}

EnumerationResult enumerate_completions(KodairaTag tag, EnumerationOptions options) {
  if (tag == KodairaTag::Unrecognized) throw DomainError("unrecognized Kodaira type");
  EnumerationResult result;
  result.y_type = kodaira_type(tag);

  const std::size_t extra = additional_count(tag);
  std::vector<Configuration> level{kodaira_fibre(tag)};
  for (std::size_t step = 1; step <= extra; ++step) {
    std::unordered_set<std::string> seen;
    std::vector<Configuration> next;
    const std::string id = "A" + std::to_string(step);
    for (const auto& c : level) {
      for (std::size_t v = 0; v < c.size(); ++v) {
        const int self_int = c[v].mult >= 1 ? c[v].mult - 2 : -2;
        Configuration g = c.with_component({id, self_int, 0});
        g = g.with_edge(v, g.size() - 1);
        if (!seen.insert(canonical_key(g)).second) continue;
        if (options.prune && hodge_exclusion(g)) {
          result.rejected.hodge_lemma++;
          continue;
        }
        next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }

  PathSearcher searcher;
  std::vector<std::pair<std::string, Configuration>> accepted;
  for (const auto& c : level) {
    result.candidates++;
    if (!is_tree(c)) {
      result.rejected.non_tree++;
      continue;
    }
    if (!adjunction_check(c).ok()) {
      result.rejected.adjunction++;
      continue;
    }
    if (options.prune && has_parity_obstruction(c)) {
      result.rejected.parity_lemma++;
      continue;
    }
    const auto m = c.intersection_matrix();
    if (!lattice::is_unimodular(m)) {
      result.rejected.non_unimodular++;
      continue;
    }
    if (lattice::signature(m) != lattice::Signature{1, 0, 9}) {
      result.rejected.wrong_signature++;
      continue;
    }
    if (!searcher.find(c)) {
      result.rejected.no_blowdown++;
      continue;
    }
    accepted.emplace_back(canonical_key(c), c);
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [k, c] : accepted) result.configurations.push_back(std::move(c));
  return result;
}

}  // namespace oppair::classify
