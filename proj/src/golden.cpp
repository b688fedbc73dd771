#include <string_view>

#include <json.hpp>

#include "oppair/classify.hpp"
#include "oppair/config_io.hpp"
#include "oppair/error.hpp"

namespace oppair::classify {

namespace detail {
std::string_view golden_source(KodairaTag tag);  // generated at build time
}

std::vector<GoldenEntry> parse_golden_file(const std::string& text, KodairaTag expected) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed golden file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("configurations") || !j["configurations"].is_array())
    throw ParseError("golden file must hold a 'configurations' array");
  if (j.contains("schema_version") && j["schema_version"] != "1")
    throw ParseError("unsupported golden schema_version");
  if (j.contains("type") && j["type"] != token(expected))
    throw ParseError("golden file declares type " + j["type"].dump() + ", expected " +
                     std::string(token(expected)));

  std::vector<GoldenEntry> out;
  for (const auto& entry : j["configurations"]) {
    GoldenEntry g;
    g.label = entry.value("label", std::string(token(expected)));
    g.comment = entry.value("comment", std::string());
    g.config = configuration_from_json(entry);
    out.push_back(std::move(g));
  }
  return out;
}

const GoldenList& golden_list() {
  static const GoldenList list = [] {
    GoldenList r;
    for (auto tag : kAdmissibleTags) r[tag] = parse_golden_file(std::string(detail::golden_source(tag)), tag);
    return r;
  }();
  return list;
}

GoldenList load_golden_dir(const std::filesystem::path& dir) {
  GoldenList r;
  for (auto tag : kAdmissibleTags) {
    const auto path = dir / (std::string(token(tag)) + ".json");
    r[tag] = parse_golden_file(read_text_file(path), tag);
  }
  return r;
}

}  // namespace oppair::classify
