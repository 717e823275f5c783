#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "circles/metrics.hpp"
#include "circles/profiles.hpp"

namespace circles {

inline constexpr const char* kToolName = "circles";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// Standard meta block: tool, version, command, config echo and the single
// timestamp key every output carries.
Json make_meta(const std::string& command, const Json& config_echo);

// Write via a temp file in the same directory, then rename.
void write_json_atomic(const std::string& path, const Json& doc);
void write_text_atomic(const std::string& path, const std::string& text);

Json load_json(const std::string& path);

Json norms_to_json(const NormalizationTable& norms);

// Per-ego detection entries of a circles.json payload.
Json detections_to_json(const std::vector<EgoDetection>& detections);

struct ParsedDetection {
  std::string ego_id;
  std::vector<std::vector<std::string>> circles;  // member author ids
  std::vector<double> taus;
  double log_likelihood = 0.0;
  long long iterations = 0;
};

std::vector<ParsedDetection> detections_from_json(const Json& egos_array);

}  // namespace circles
