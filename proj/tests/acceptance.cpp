// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oppair/classify.hpp"
#include "oppair/symbolic/verify.hpp"

using namespace oppair;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::set<std::string> keys(const std::vector<Configuration>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(canonical_key(c));
  return out;
}

std::vector<classify::GoldenEntry> golden() {
  std::vector<classify::GoldenEntry> out;
  for (const auto& [tag, entries] : classify::golden_list()) out.insert(out.end(), entries.begin(), entries.end());
  return out;
}

Outcome counts() {
  const std::pair<KodairaTag, std::size_t> expected[] = {{KodairaTag::D4, 7}, {KodairaTag::D5, 8}, {KodairaTag::D6, 2},
                                                         {KodairaTag::D7, 1}, {KodairaTag::E6, 6}, {KodairaTag::E7, 3},
                                                         {KodairaTag::E8, 1}};
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream os;
  for (const auto& [tag, n] : expected) {
    const auto r = classify::enumerate_completions(tag);
    std::set<std::string> g;
    for (const auto& e : classify::golden_list().at(tag)) g.insert(canonical_key(e.config));
    ok &= r.configurations.size() == n && keys(r.configurations) == g;
    os << token(tag) << "=" << r.configurations.size() << " ";
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  os << "set-equal to golden: " << (ok ? "yes" : "no") << ", " << s << " s (limit 10 s)";
  return {ok && s < 10.0, os.str()};
}

Outcome exclusions() {
  const std::size_t d9 = classify::enumerate_completions(KodairaTag::D9).configurations.size();
  const std::size_t d8 = classify::enumerate_completions(KodairaTag::D8).configurations.size();
  const auto dets = classify::d8_attachment_determinants();
  bool minus_one = false;
  std::ostringstream os;
  os << "D9=" << d9 << " D8=" << d8 << " D8 attachment dets {";
  for (std::size_t i = 0; i < dets.size(); ++i) {
    os << (i ? "," : "") << dets[i].get_str();
    minus_one |= dets[i] == -1;
  }
  os << "}";
  return {d9 == 0 && d8 == 0 && !dets.empty() && !minus_one, os.str()};
}

Outcome lattice_invariants() {
  std::size_t good = 0, total = 0;
  for (const auto& e : golden()) {
    const auto m = e.config.intersection_matrix();
    good += lattice::determinant(m) == -1 && lattice::signature(m) == lattice::Signature{1, 0, 9};
    ++total;
  }
  std::size_t radical = 0;
  for (KodairaTag tag : kAdmissibleTags) {
    const Configuration y = kodaira_fibre(tag);
    radical += lattice::radical_contains(y.intersection_matrix(), y.multiplicities());
  }
  std::ostringstream os;
  os << good << "/" << total << " golden with det -1 and signature (1,0,9); " << radical << "/7 fibres with Y^2 = 0";
  return {good == total && total == 28 && radical == 7, os.str()};
}

Outcome noether() {
  using namespace geometry;
  const ModelSpec models[] = {{MinimalModel::P2, 0, false}, {MinimalModel::Fn, 0, false}, {MinimalModel::Fn, 1, false},
                              {MinimalModel::Fn, 2, false}, {MinimalModel::Fn, 3, false},
                              {MinimalModel::F2SInfinity, 2, true}};
  std::mt19937 rng(1);
  std::size_t steps = 0, bad = 0;
  for (const auto& spec : models) {
    for (int t = 0; t < 200; ++t) {
      SurfacePair p = minimal_pair(spec);
      bad += euler_number(p.config()) + canonical_square(p.config()) != 12;
      const int depth = 1 + t % 8;
      for (int d = 0; d < depth; ++d) {
        std::vector<Center> cs;
        const Configuration& c = p.config();
        for (std::size_t i = 0; i < c.size(); ++i)
          if (c[i].mult >= 1) cs.push_back(Center::smooth_point(c[i].id));
        for (const auto& [a, b] : c.edges())
          if (c[a].mult + c[b].mult >= 1) cs.push_back(Center::node(c[a].id, c[b].id));
        p = blowup(p, cs[std::uniform_int_distribution<std::size_t>(0, cs.size() - 1)(rng)]);
        bad += euler_number(p.config()) + canonical_square(p.config()) != 12;
        ++steps;
      }
    }
  }
  std::ostringstream os;
  os << steps << " blowups over " << 6 * 200 << " towers of depth <= 8, " << bad << " violations";
  return {bad == 0, os.str()};
}

Outcome realizability() {
  const auto start = std::chrono::steady_clock::now();
  classify::PathSearcher searcher;
  std::size_t found = 0, with_blowups = 0;
  bool d7_f0 = false;
  for (const auto& e : golden()) {
    const auto path = searcher.find(e.config);
    if (!path) continue;
    if (classify::match_terminal(classify::replay_path(e.config, *path)) != path->terminal) continue;
    ++found;
    with_blowups += path->blowups() > 0;
    if (e.label == "D7") d7_f0 = path->terminal == classify::Terminal::F0;
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << found << "/28 reach a minimal pair (" << with_blowups << " after extra blowups at points of Y); D7 -> "
     << (d7_f0 ? "F0, 2s0+2f" : "other") << "; " << s << " s (limit 5 s)";
  return {found == 28 && d7_f0 && s < 5.0, os.str()};
}

Outcome symbolic_e8() {
  const auto r = symbolic::verify_e8_charts();
  const std::size_t ids = r.passed(symbolic::CheckKind::Identity);
  const std::size_t poles = r.passed(symbolic::CheckKind::PoleOrder);
  std::ostringstream os;
  os << ids << "/5 identities zero, " << poles << "/2 pole orders (4 along D0', 3 along D1); " << r.seconds << " s (limit 2 s)";
  return {r.ok() && ids == 5 && r.count(symbolic::CheckKind::Identity) == 5 && poles == 2 && r.seconds < 2.0,
          os.str()};
}

Outcome gluing() {
  const auto r = symbolic::verify_gluing_sigma2();
  std::size_t passed = 0;
  for (const auto& c : r.checks) passed += c.passed;
  std::ostringstream os;
  os << passed << "/" << r.checks.size() << " transition checks";
  return {r.ok(), os.str()};
}

Outcome pruning() {
  std::size_t same = 0;
  for (KodairaTag tag : kAdmissibleTags)
    same += classify::enumerate_completions(tag, {.prune = true}).configurations ==
            classify::enumerate_completions(tag, {.prune = false}).configurations;
  std::ostringstream os;
  os << same << "/7 types identical with and without pruning";
  return {same == 7, os.str()};
}

Outcome mutations() {
  std::size_t total = 0, caught = 0;
  for (const auto& e : golden()) {
    const Configuration& c = e.config;
    auto probe = [&](const Configuration& m) {
      ++total;
      caught += !validate_op_pair(m).ok();
    };
    for (std::size_t i = 0; i < c.size(); ++i) {
      probe(c.with_self_int(i, c[i].self_int + 1));
      probe(c.with_self_int(i, c[i].self_int - 1));
      probe(c.without_component(i));
    }
    for (const auto& [a, b] : c.edges()) probe(c.without_edge(a, b));
  }
  std::ostringstream os;
  os << caught << "/" << total << " single mutations rejected";
  return {caught == total && total > 0, os.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 classification counts", counts},
      {"2 exclusions D8 D9", exclusions},
      {"3 lattice invariants", lattice_invariants},
      {"4 Noether bookkeeping", noether},
      {"5 realizability", realizability},
      {"6 symbolic E8 identities", symbolic_e8},
      {"7 gluing suite", gluing},
      {"8 pruning soundness", pruning},
      {"9 mutation robustness", mutations},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-26s %s  [%.0f ms]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), ms);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
