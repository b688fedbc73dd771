#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "oppair/config.hpp"

namespace oppair {

// {"components":[{"id":..,"self_int":..,"mult":..}],"edges":[[id,id]]}
// Unknown keys are ignored so that envelopes (labels, comments) can carry
// extra fields. Any schema violation throws ParseError.
Configuration configuration_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Configuration& c);

Configuration parse_configuration(std::string_view text);
Configuration load_configuration(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

// Graphviz rendering; additional components (mult 0) are dashed.
std::string to_dot(const Configuration& c, std::string_view graph_name = "F");

}  // namespace oppair
