// oppair: command-line front end.
// Exit codes: 0 success, 1 domain failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oppair/classify.hpp"
#include "oppair/config_io.hpp"
#include "oppair/error.hpp"
#include "oppair/symbolic/verify.hpp"

namespace {

using namespace oppair;
using nlohmann::json;

constexpr int kOk = 0, kFailure = 1, kUsage = 2;

std::string summary(const Configuration& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& k = c.components()[i];
    os << (i ? " " : "") << k.id << "(" << k.self_int << "," << k.mult << ")";
  }
  os << " |";
  for (const auto& [a, b] : c.edges()) os << " " << c.components()[a].id << "-" << c.components()[b].id;
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

// Golden label of an enumerated configuration, if any.
std::map<std::string, std::string> golden_labels(const classify::GoldenList& golden) {
  std::map<std::string, std::string> labels;
  for (const auto& [tag, entries] : golden)
    for (const auto& e : entries) labels.emplace(canonical_key(e.config), e.label);
  return labels;
}

int run_enumerate(const std::string& type, const std::string& json_out, bool no_prune) {
  const auto tag = tag_from_token(type);
  if (!tag || *tag == KodairaTag::Unrecognized) {
    std::cerr << "unknown type '" << type << "' (expected D4..D9, E6, E7 or E8)\n";
    return kUsage;
  }
  const auto result = classify::enumerate_completions(*tag, {.prune = !no_prune});
  const auto labels = golden_labels(classify::golden_list());
  std::cout << result.configurations.size() << " configurations\n";
  json list = json::array();
  for (std::size_t i = 0; i < result.configurations.size(); ++i) {
    const auto& c = result.configurations[i];
    const auto it = labels.find(canonical_key(c));
    const std::string label = it != labels.end() ? it->second : type + "-#" + std::to_string(i + 1);
    std::cout << "  " << label << ": " << summary(c) << "\n";
    json j = to_json(c);
    j["label"] = label;
    list.push_back(std::move(j));
  }
  if (!json_out.empty()) {
    const json doc{{"schema_version", "1"}, {"type", std::string(token(*tag))}, {"configurations", list}};
    write_file(json_out, doc.dump(2) + "\n");
  }
  return kOk;
}

int run_validate(const std::string& path) {
  const Configuration c = load_configuration(path);
  const auto report = validate_op_pair(c);
  for (const auto& check : report.checks) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name;
    if (!check.detail.empty()) std::cout << ": " << check.detail;
    std::cout << "\n";
  }
  std::cout << (report.ok() ? "valid Okamoto-Painleve pair\n" : "not an Okamoto-Painleve pair\n");
  return report.ok() ? kOk : kFailure;
}

int run_blowdown(const std::string& path, const std::string& dot_out) {
  const Configuration c = load_configuration(path);
  const auto found = classify::find_blowdown_path(c);
  if (!found) {
    std::cout << "no path\n";
    return kFailure;
  }
  std::cout << found->steps.size() << " steps (" << found->contractions() << " contractions, "
            << found->blowups() << " blowups)\n";
  std::string dot = to_dot(c, "step0");
  Configuration cur = c;
  for (std::size_t i = 0; i < found->steps.size(); ++i) {
    std::cout << "  " << i + 1 << ". " << geometry::describe(found->steps[i]) << "\n";
    cur = geometry::apply(cur, found->steps[i]);
    dot += to_dot(cur, "step" + std::to_string(i + 1));
  }
  std::cout << "terminal: " << classify::terminal_name(found->terminal) << "\n";
  if (!dot_out.empty()) write_file(dot_out, dot);
  return kOk;
}

const char* kind_name(symbolic::CheckKind k) {
  switch (k) {
    case symbolic::CheckKind::Identity: return "identities";
    case symbolic::CheckKind::PoleOrder: return "pole orders";
    case symbolic::CheckKind::Tower: return "tower checks";
  }
  return "";
}

int run_verify(const std::string& suite) {
  const auto report = symbolic::verify_suite(suite);
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.residual.empty()) std::cout << "  residual: " << c.residual;
    std::cout << "\n";
  }
  for (auto k : {symbolic::CheckKind::Identity, symbolic::CheckKind::PoleOrder, symbolic::CheckKind::Tower}) {
    if (report.count(k) == 0) continue;
    std::cout << report.passed(k) << "/" << report.count(k) << " " << kind_name(k) << " pass\n";
  }
  std::cout << "suite " << suite << ": " << (report.ok() ? "pass" : "FAIL") << "\n";
  return report.ok() ? kOk : kFailure;
}

int run_golden_diff(const std::string& dir) {
  const classify::GoldenList golden = dir.empty() ? classify::golden_list() : classify::load_golden_dir(dir);
  bool identical = true;
  std::ostringstream diffs;
  std::cout << "type   Kodaira  equation  count  golden\n";
  for (KodairaTag tag : kAdmissibleTags) {
    const auto result = classify::enumerate_completions(tag);
    std::map<std::string, const Configuration*> found;
    for (const auto& c : result.configurations) found.emplace(canonical_key(c), &c);
    std::set<std::string> expected;
    const auto it = golden.find(tag);
    const std::size_t golden_count = it == golden.end() ? 0 : it->second.size();
    if (it != golden.end()) {
      for (const auto& e : it->second) {
        const std::string key = canonical_key(e.config);
        expected.insert(key);
        if (!found.count(key)) {
          identical = false;
          diffs << token(tag) << ": golden " << e.label << " not produced by enumeration\n";
        }
      }
    }
    for (const auto& [key, c] : found) {
      if (expected.count(key)) continue;
      identical = false;
      diffs << token(tag) << ": enumerated configuration missing from golden list: " << summary(*c) << "\n";
    }
    char line[96];
    std::snprintf(line, sizeof line, "%-6s %-8s %-9s %5zu  %6zu\n", std::string(dynkin_name(tag)).c_str(),
                  std::string(kodaira_notation(tag)).c_str(),
                  std::string(painleve_name(kodaira_type(tag).painleve)).c_str(), result.configurations.size(),
                  golden_count);
    std::cout << line;
  }
  std::cout << diffs.str() << (identical ? "identical\n" : "differences found\n");
  return identical ? kOk : kFailure;
}

int run_export_dot(const std::string& path, const std::string& out) {
  const std::string dot = to_dot(load_configuration(path));
  if (out.empty()) std::cout << dot;
  else write_file(out, dot);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Okamoto-Painleve pair classification toolkit"};
  app.require_subcommand(1, 1);

  std::string type, json_out, path, dot_out, suite, golden_dir, out;
  bool no_prune = false;

  auto* enumerate = app.add_subcommand("enumerate", "enumerate the 10-component completions of a Kodaira fibre");
  enumerate->add_option("--type", type, "D4 D5 D6 D7 D8 D9 E6 E7 E8")->required();
  enumerate->add_option("--json", json_out, "write the configurations as JSON");
  enumerate->add_flag("--no-prune", no_prune, "disable the parity and Hodge-index pruning");

  auto* validate = app.add_subcommand("validate", "check the Okamoto-Painleve conditions");
  validate->add_option("config", path, "configuration JSON")->required();

  auto* blowdown = app.add_subcommand("blowdown", "search a path to a minimal pair");
  blowdown->add_option("config", path, "configuration JSON")->required();
  blowdown->add_option("--dot", dot_out, "write every stage as DOT");

  auto* verify = app.add_subcommand("verify-charts", "run a symbolic identity suite");
  verify->add_option("--suite", suite, "e8, d4 or gluing")
      ->required()
      ->check(CLI::IsMember({"e8", "d4", "gluing"}));

  auto* diff = app.add_subcommand("golden-diff", "compare enumeration with the golden list");
  diff->add_option("--golden-dir", golden_dir, "directory with <type>.json files");

  auto* dot = app.add_subcommand("export-dot", "render a configuration as DOT");
  dot->add_option("config", path, "configuration JSON")->required();
  dot->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) return run_enumerate(type, json_out, no_prune);
    if (*validate) return run_validate(path);
    if (*blowdown) return run_blowdown(path, dot_out);
    if (*verify) return run_verify(suite);
    if (*diff) return run_golden_diff(golden_dir);
    if (*dot) return run_export_dot(path, out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
