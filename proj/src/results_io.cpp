#include "circles/results_io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace circles {

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Json make_meta(const std::string& command, const Json& config_echo) {
  Json meta;
  meta["tool"] = kToolName;
  meta["version"] = kToolVersion;
  meta["command"] = command;
  meta["generated_at"] = utc_timestamp();
  meta["config"] = config_echo;
  return meta;
}

void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + tmp + " -> " + path);
}

void write_json_atomic(const std::string& path, const Json& doc) {
  write_text_atomic(path, doc.dump(2) + "\n");
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return doc;
}

Json norms_to_json(const NormalizationTable& norms) {
  Json j;
  j["max_citations"] = norms.max_citations;
  j["max_citations_per_paper"] = norms.max_citations_per_paper;
  j["max_h_index"] = norms.max_h_index;
  j["max_coauthors"] = norms.max_coauthors;
  j["max_papers"] = norms.max_papers;
  j["max_papers_per_decade"] = norms.max_papers_per_decade;
  j["max_common_coauthors"] = norms.max_common_coauthors;
  return j;
}

Json detections_to_json(const std::vector<EgoDetection>& detections) {
  Json arr = Json::array();
  for (const auto& det : detections) {
    Json entry;
    entry["ego"] = det.net.ego_id;
    entry["alters"] = det.net.alter_count();
    entry["iterations"] = det.iterations;
    entry["final_log_likelihood"] = det.log_likelihood;
    Json circles_json = Json::array();
    for (const auto& c : det.circles) {
      Json cj;
      Json members = Json::array();
      for (int y : c.members) members.push_back(det.net.alters[y]);
      cj["members"] = members;
      cj["tau"] = c.tau;
      circles_json.push_back(cj);
    }
    entry["circles"] = circles_json;
    arr.push_back(entry);
  }
  return arr;
}

std::vector<ParsedDetection> detections_from_json(const Json& egos_array) {
  std::vector<ParsedDetection> out;
  for (const auto& entry : egos_array) {
    ParsedDetection det;
    det.ego_id = entry.at("ego").get<std::string>();
    det.log_likelihood = entry.at("final_log_likelihood").get<double>();
    det.iterations = entry.at("iterations").get<long long>();
    for (const auto& cj : entry.at("circles")) {
      det.circles.push_back(cj.at("members").get<std::vector<std::string>>());
      det.taus.push_back(cj.at("tau").get<double>());
    }
    out.push_back(std::move(det));
  }
  return out;
}

}  // namespace circles
