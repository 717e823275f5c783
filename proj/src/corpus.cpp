#include "circles/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace circles {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream iss(s);
  while (std::getline(iss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const std::string& what, long line_no) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad " +
                             what + " value '" + s + "'");
  }
}

void validate_record(const PaperRecord& rec, const CorpusConfig& config) {
  if (rec.paper_id.empty())
    throw std::runtime_error("record with empty paper_id");
  if (rec.author_ids.empty())
    throw std::runtime_error("paper " + rec.paper_id + ": no authors");
  std::set<std::string> seen;
  for (const auto& a : rec.author_ids) {
    if (a.empty())
      throw std::runtime_error("paper " + rec.paper_id + ": empty author id");
    if (!seen.insert(a).second)
      throw std::runtime_error("paper " + rec.paper_id +
                               ": duplicate author '" + a + "'");
  }
  if (rec.year < config.min_year || rec.year > config.max_year)
    throw std::runtime_error("paper " + rec.paper_id + ": year " +
                             std::to_string(rec.year) + " outside [" +
                             std::to_string(config.min_year) + ", " +
                             std::to_string(config.max_year) + "]");
  if (rec.field_id < 0 ||
      rec.field_id >= static_cast<int>(config.field_names.size()))
    throw std::runtime_error("paper " + rec.paper_id + ": field_id " +
                             std::to_string(rec.field_id) + " out of range");
  if (rec.citation_count < 0)
    throw std::runtime_error("paper " + rec.paper_id +
                             ": negative citation count");
}

}  // namespace

CorpusConfig CorpusConfig::defaults() {
  CorpusConfig c;
  c.field_names = {
      "algorithms",       "artificial_intelligence", "bioinformatics",
      "computer_architecture", "computer_education", "computer_vision",
      "databases",        "data_mining",     "distributed_computing",
      "embedded_systems", "graphics",        "hci",
      "information_retrieval", "machine_learning", "multimedia",
      "natural_language_processing", "networking", "operating_systems",
      "programming_languages", "real_time_systems", "scientific_computing",
      "security",         "software_engineering", "theory"};
  c.decade_bins = {{1960, 1970}, {1971, 1980}, {1981, 1990},
                   {1991, 2000}, {2001, 2009}};
  c.min_year = 1960;
  c.max_year = 2009;
  return c;
}

void CorpusConfig::validate() const {
  if (field_names.size() != 24)
    throw std::runtime_error("config: expected 24 field names, got " +
                             std::to_string(field_names.size()));
  if (decade_bins.size() != 5)
    throw std::runtime_error("config: expected 5 decade bins, got " +
                             std::to_string(decade_bins.size()));
  std::set<std::string> uniq(field_names.begin(), field_names.end());
  if (uniq.size() != field_names.size())
    throw std::runtime_error("config: duplicate field name");
  int prev_end = -100000;
  for (const auto& bin : decade_bins) {
    if (bin.first_year > bin.last_year)
      throw std::runtime_error("config: decade bin ends before it starts");
    if (bin.first_year <= prev_end)
      throw std::runtime_error("config: decade bins overlap or are unordered");
    prev_end = bin.last_year;
  }
  if (min_year > max_year) throw std::runtime_error("config: bad year range");
}

CorpusConfig CorpusConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  CorpusConfig c = defaults();
  std::string line, section;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section == "fields" && key == "names") {
      c.field_names.clear();
      for (auto& name : split(value, ';')) c.field_names.push_back(trim(name));
    } else if (section == "decades" && key == "bins") {
      c.decade_bins.clear();
      for (auto& tok : split(value, ';')) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
          throw std::runtime_error("config line " + std::to_string(line_no) +
                                   ": decade bin must be start:end");
        DecadeBin bin;
        bin.first_year = parse_int(trim(tok.substr(0, colon)), "decade start", line_no);
        bin.last_year = parse_int(trim(tok.substr(colon + 1)), "decade end", line_no);
        c.decade_bins.push_back(bin);
      }
    } else if (section == "years" && key == "range") {
      const auto colon = value.find(':');
      if (colon == std::string::npos)
        throw std::runtime_error("config line " + std::to_string(line_no) +
                                 ": year range must be min:max");
      c.min_year = parse_int(trim(value.substr(0, colon)), "min year", line_no);
      c.max_year = parse_int(trim(value.substr(colon + 1)), "max year", line_no);
    } else {
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": unknown key '" + key + "' in section [" +
                               section + "]");
    }
  }
  c.validate();
  return c;
}

PaperCorpus::PaperCorpus(std::vector<PaperRecord> papers, CorpusConfig config)
    : papers_(std::move(papers)), config_(std::move(config)) {
  config_.validate();
  for (const auto& rec : papers_) validate_record(rec, config_);
}

int PaperCorpus::decade_bin_of(int year) const {
  for (std::size_t i = 0; i < config_.decade_bins.size(); ++i) {
    const auto& bin = config_.decade_bins[i];
    if (year >= bin.first_year && year <= bin.last_year)
      return static_cast<int>(i);
  }
  return -1;
}

PaperCorpus parse_corpus_csv(const std::string& text,
                             const CorpusConfig& config) {
  std::vector<PaperRecord> records;
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line_no == 1 && line.rfind("paper_id,", 0) == 0) continue;  // header
    const auto cols = split(line, ',');
    if (cols.size() != 5)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 5 columns, got " +
                               std::to_string(cols.size()));
    PaperRecord rec;
    rec.paper_id = trim(cols[0]);
    rec.year = parse_int(trim(cols[1]), "year", line_no);
    rec.field_id = parse_int(trim(cols[2]), "field_id", line_no);
    rec.citation_count = parse_int(trim(cols[3]), "citation_count", line_no);
    for (auto& a : split(trim(cols[4]), ';')) {
      const std::string id = trim(a);
      if (!id.empty()) rec.author_ids.push_back(id);
    }
    validate_record(rec, config);
    records.push_back(std::move(rec));
  }
  return PaperCorpus(std::move(records), config);
}

PaperCorpus load_corpus(const std::string& path, CorpusFormat format,
                        const CorpusConfig& config) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (format == CorpusFormat::kCsv) return parse_corpus_csv(buf.str(), config);

  std::vector<PaperRecord> records;
  std::istringstream text(buf.str());
  std::string line;
  long line_no = 0;
  while (std::getline(text, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(stripped);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " +
                               e.what());
    }
    PaperRecord rec;
    try {
      rec.paper_id = j.at("paper_id").get<std::string>();
      rec.year = j.at("year").get<int>();
      rec.field_id = j.at("field_id").get<int>();
      rec.citation_count = j.at("citation_count").get<long long>();
      rec.author_ids = j.at("author_ids").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " +
                               e.what());
    }
    validate_record(rec, config);
    records.push_back(std::move(rec));
  }
  return PaperCorpus(std::move(records), config);
}

void save_corpus_csv(const PaperCorpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write corpus file: " + path);
  out << "paper_id,year,field_id,citation_count,author_ids\n";
  for (const auto& rec : corpus.papers()) {
    out << rec.paper_id << ',' << rec.year << ',' << rec.field_id << ','
        << rec.citation_count << ',';
    for (std::size_t i = 0; i < rec.author_ids.size(); ++i) {
      if (i) out << ';';
      out << rec.author_ids[i];
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

PaperCorpus snapshot(const PaperCorpus& corpus, int cutoff_year) {
  std::vector<PaperRecord> kept;
  for (const auto& rec : corpus.papers())
    if (rec.year <= cutoff_year) kept.push_back(rec);
  return PaperCorpus(std::move(kept), corpus.config());
}

int CoauthorGraph::index_of(const std::string& author) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), author);
  if (it == nodes.end() || *it != author) return -1;
  return static_cast<int>(it - nodes.begin());
}

bool CoauthorGraph::has_edge(int x, int y) const {
  if (x == y) return false;
  const auto& nbrs = adjacency[x];
  return std::binary_search(nbrs.begin(), nbrs.end(), y);
}

CoauthorGraph build_graph(const PaperCorpus& corpus) {
  CoauthorGraph g;
  std::set<std::string> author_set;
  for (const auto& rec : corpus.papers())
    author_set.insert(rec.author_ids.begin(), rec.author_ids.end());
  g.nodes.assign(author_set.begin(), author_set.end());

  std::map<std::string, int> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    index[g.nodes[i]] = static_cast<int>(i);

  g.adjacency.resize(g.nodes.size());
  for (const auto& rec : corpus.papers()) {
    for (std::size_t i = 0; i < rec.author_ids.size(); ++i) {
      for (std::size_t j = i + 1; j < rec.author_ids.size(); ++j) {
        int a = index[rec.author_ids[i]];
        int b = index[rec.author_ids[j]];
        if (a > b) std::swap(a, b);
        auto [it, inserted] =
            g.edge_info.try_emplace({a, b}, CoauthorGraph::EdgeInfo{rec.year, 1});
        if (!inserted) {
          it->second.first_year = std::min(it->second.first_year, rec.year);
          ++it->second.paper_count;
        } else {
          g.adjacency[a].push_back(b);
          g.adjacency[b].push_back(a);
        }
      }
    }
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

}  // namespace circles
