#include "oppair/config_io.hpp"

#include <fstream>
#include <sstream>

#include "oppair/error.hpp"

namespace oppair {

namespace {

const nlohmann::json& field(const nlohmann::json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

int int_field(const nlohmann::json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_number_integer()) throw ParseError(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

std::string dot_escape(std::string_view s) {
  std::string r;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') r += '\\';
    r += ch;
  }
  return r;
}

}  // namespace

Configuration configuration_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("configuration must be a JSON object");
  const auto& comps = field(j, "components", "configuration");
  const auto& edges = field(j, "edges", "configuration");
  if (!comps.is_array()) throw ParseError("'components' must be an array");
  if (!edges.is_array()) throw ParseError("'edges' must be an array");

  std::vector<Component> cs;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto& c = comps[k];
    const std::string where = "components[" + std::to_string(k) + "]";
    if (!c.is_object()) throw ParseError(where + " must be an object");
    const auto& id = field(c, "id", where);
    if (!id.is_string()) throw ParseError(where + ": 'id' must be a string");
    cs.push_back({id.get<std::string>(), int_field(c, "self_int", where), int_field(c, "mult", where)});
  }
  std::vector<std::pair<std::string, std::string>> es;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ParseError("edges[" + std::to_string(k) + "] must be a pair of component ids");
    es.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  try {
    return Configuration(std::move(cs), es);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json to_json(const Configuration& c) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& comp : c.components())
    comps.push_back({{"id", comp.id}, {"self_int", comp.self_int}, {"mult", comp.mult}});
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : c.edges()) edges.push_back({c[a].id, c[b].id});
  return {{"components", comps}, {"edges", edges}};
}

Configuration parse_configuration(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return configuration_from_json(j);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Configuration load_configuration(const std::filesystem::path& path) {
  return parse_configuration(read_text_file(path));
}

std::string to_dot(const Configuration& c, std::string_view graph_name) {
  std::ostringstream out;
  out << "graph \"" << dot_escape(graph_name) << "\" {\n";
  for (const auto& comp : c.components()) {
    out << "  \"" << dot_escape(comp.id) << "\" [label=\"" << dot_escape(comp.id) << "\\n("
        << comp.self_int << ") " << comp.mult << "\"";
    if (comp.mult == 0) out << ", style=dashed";
    out << "];\n";
  }
  for (auto [a, b] : c.edges())
    out << "  \"" << dot_escape(c[a].id) << "\" -- \"" << dot_escape(c[b].id) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace oppair
