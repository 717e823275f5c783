// Command-line driver: synth, detect, eval, predict, report.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "circles/corpus.hpp"
#include "circles/driver.hpp"
#include "circles/ego.hpp"
#include "circles/metrics.hpp"
#include "circles/optimizer.hpp"
#include "circles/predict.hpp"
#include "circles/profiles.hpp"
#include "circles/results_io.hpp"
#include "circles/rng.hpp"
#include "circles/synth.hpp"

namespace {

using circles::Json;

struct CommonOptions {
  std::string corpus_path;
  std::string format = "csv";
  std::string config_path;
};

circles::CorpusFormat parse_format(const std::string& name) {
  if (name == "csv") return circles::CorpusFormat::kCsv;
  if (name == "jsonl") return circles::CorpusFormat::kJsonl;
  throw CLI::ValidationError("--format", "must be csv or jsonl");
}

circles::CorpusConfig resolve_config(const std::string& flag_path) {
  if (!flag_path.empty()) return circles::CorpusConfig::from_file(flag_path);
  if (const char* env = std::getenv("CIRCLES_CONFIG"); env && *env)
    return circles::CorpusConfig::from_file(env);
  return circles::CorpusConfig::defaults();
}

std::pair<int, int> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--window", "expected start:end");
  try {
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--window", "expected start:end years");
  }
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
  return sizes;
}

// ---------------------------------------------------------------- detect --

struct DetectOptions {
  CommonOptions common;
  int cutoff_year = 2009;
  double tau_l = 0.2;
  std::uint64_t seed = 0;
  int min_alters = 3;
  int threads = 1;
  long long max_iterations = 0;
  int patience = 0;
  std::string out_path = "circles.json";
  std::string dump_profiles_path;
};

std::vector<circles::EgoDetection> detect_all(
    const circles::CoauthorGraph& graph, const circles::SnapshotStats& stats,
    const DetectOptions& opt) {
  circles::OptimizerConfig cfg;
  cfg.tau_l = opt.tau_l;
  cfg.max_iterations = opt.max_iterations;
  cfg.patience = opt.patience;
  return circles::detect_circles(graph, stats, opt.min_alters, cfg, opt.seed,
                                 std::max(1, opt.threads));
}

void dump_profiles_csv(const std::string& path,
                       const std::vector<circles::EgoDetection>& detections,
                       const circles::SnapshotStats& stats) {
  std::ostringstream out;
  out << "ego,alter";
  for (const auto& name : circles::profile_column_names()) out << ',' << name;
  out << '\n';
  for (const auto& det : detections) {
    for (const auto& alter : det.net.alters) {
      out << det.net.ego_id << ',' << alter;
      for (double v : circles::profile(stats, det.net.ego_id, alter))
        out << ',' << v;
      out << '\n';
    }
  }
  circles::write_text_atomic(path, out.str());
}

int run_detect(const DetectOptions& opt) {
  const auto config = resolve_config(opt.common.config_path);
  const auto corpus = circles::load_corpus(opt.common.corpus_path,
                                           parse_format(opt.common.format), config);
  const auto snap = circles::snapshot(corpus, opt.cutoff_year);
  const auto graph = circles::build_graph(snap);
  const circles::SnapshotStats stats(snap, graph);

  const auto detections = detect_all(graph, stats, opt);
  if (!opt.dump_profiles_path.empty())
    dump_profiles_csv(opt.dump_profiles_path, detections, stats);

  Json config_echo;
  config_echo["corpus"] = opt.common.corpus_path;
  config_echo["format"] = opt.common.format;
  config_echo["cutoff_year"] = opt.cutoff_year;
  config_echo["tau_l"] = opt.tau_l;
  config_echo["seed"] = opt.seed;
  config_echo["min_alters"] = opt.min_alters;
  config_echo["threads"] = opt.threads;
  config_echo["max_iterations"] = opt.max_iterations;
  config_echo["patience"] = opt.patience;

  Json doc;
  doc["meta"] = circles::make_meta("detect", config_echo);
  doc["meta"]["norms"] = circles::norms_to_json(stats.norms());
  doc["egos"] = circles::detections_to_json(detections);
  circles::write_json_atomic(opt.out_path, doc);

  std::size_t total_circles = 0;
  for (const auto& det : detections) total_circles += det.circles.size();
  std::cout << "detect: " << detections.size() << " egos, " << total_circles
            << " circles -> " << opt.out_path << "\n";
  return 0;
}

// ------------------------------------------------------------------ eval --

struct EvalOptions {
  CommonOptions common;
  std::string circles_path;
  std::string out_dir = ".";
  double bin_width = 0.05;
};

void write_tsv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows) {
  std::ostringstream out;
  out << header << '\n';
  for (const auto& row : rows) out << row << '\n';
  circles::write_text_atomic(path, out.str());
}

int run_eval(const EvalOptions& opt) {
  const Json doc = circles::load_json(opt.circles_path);
  const auto& echo = doc.at("meta").at("config");
  const int cutoff_year = echo.at("cutoff_year").get<int>();

  const auto config = resolve_config(opt.common.config_path);
  const auto corpus = circles::load_corpus(opt.common.corpus_path,
                                           parse_format(opt.common.format), config);
  const auto snap = circles::snapshot(corpus, cutoff_year);
  const auto graph = circles::build_graph(snap);
  const circles::SnapshotStats stats(snap, graph);

  // Rebuild per-ego detections from the stored member ids.
  std::vector<circles::EgoDetection> detections;
  for (const auto& parsed : circles::detections_from_json(doc.at("egos"))) {
    circles::EgoDetection det;
    det.net = circles::ego_network(graph, parsed.ego_id);
    det.log_likelihood = parsed.log_likelihood;
    det.iterations = parsed.iterations;
    for (std::size_t c = 0; c < parsed.circles.size(); ++c) {
      circles::Circle circle;
      circle.tau = parsed.taus[c];
      for (const auto& member : parsed.circles[c]) {
        const auto it = std::lower_bound(det.net.alters.begin(),
                                         det.net.alters.end(), member);
        if (it == det.net.alters.end() || *it != member)
          throw std::runtime_error("circle member " + member +
                                   " is not an alter of " + parsed.ego_id);
        circle.members.push_back(
            static_cast<int>(it - det.net.alters.begin()));
      }
      std::sort(circle.members.begin(), circle.members.end());
      det.circles.push_back(std::move(circle));
    }
    detections.push_back(std::move(det));
  }
  if (detections.empty()) throw std::runtime_error("no egos in " + opt.circles_path);

  std::map<std::string, long long> citations;
  std::map<std::string, int> major_fields;
  for (const auto& [author, st] : stats.all_stats()) {
    citations[author] = st.citations;
    major_fields[author] = st.major_field;
  }

  const auto tables = circles::summarize(detections, citations, major_fields);
  const std::string dir = opt.out_dir.empty() ? "." : opt.out_dir;

  {  // similarity vs. edge existence over general profiles
    std::map<std::string, std::vector<double>> profiles;
    for (const auto& [author, st] : stats.all_stats())
      profiles[author] = circles::general_profile(stats, author);
    std::vector<std::string> rows;
    for (const auto& bin :
         circles::similarity_edge_stats(graph, profiles, opt.bin_width)) {
      std::ostringstream row;
      row << bin.bin_low << '\t' << bin.bin_high << '\t' << bin.pair_count
          << '\t' << bin.edge_count << '\t' << bin.conditional_edge_probability;
      rows.push_back(row.str());
    }
    write_tsv(dir + "/fig2.tsv", "sim_low\tsim_high\tpairs\tedges\tp_edge", rows);
  }

  const auto author_table = [&](const std::string& name, auto value) {
    std::vector<std::string> rows;
    for (const auto& r : tables.author_rows) {
      std::ostringstream row;
      row << r.author << '\t' << r.citations << '\t' << value(r);
      rows.push_back(row.str());
    }
    write_tsv(dir + "/" + name, "author\tcitations\tvalue", rows);
  };
  author_table("fig3a.tsv", [](const auto& r) { return r.circle_count; });
  author_table("fig3b.tsv", [](const auto& r) { return r.mean_size; });
  author_table("fig3c.tsv", [](const auto& r) { return r.memberships; });
  author_table("fig3d.tsv", [](const auto& r) { return r.mean_cliquishness; });

  {
    std::vector<std::string> rows;
    for (const auto& [size, count] : tables.size_distribution)
      rows.push_back(std::to_string(size) + "\t" + std::to_string(count));
    write_tsv(dir + "/fig4a.tsv", "size\tcircles", rows);
  }
  {
    std::vector<std::string> rows;
    for (const auto& [bin, count] : tables.cliquishness_histogram) {
      std::ostringstream row;
      row << bin * 0.05 << '\t' << (bin + 1) * 0.05 << '\t' << count;
      rows.push_back(row.str());
    }
    write_tsv(dir + "/fig4b.tsv", "cliq_low\tcliq_high\tcircles", rows);
  }
  {
    std::vector<std::string> rows;
    for (const auto& [size, acc] : tables.cliquishness_by_size) {
      std::ostringstream row;
      row << size << '\t' << acc.first / acc.second << '\t' << acc.second;
      rows.push_back(row.str());
    }
    write_tsv(dir + "/fig4c.tsv", "size\tmean_cliquishness\tcircles", rows);
  }
  {
    std::vector<std::string> rows;
    for (const auto& [count, egos] : tables.circles_per_ego)
      rows.push_back(std::to_string(count) + "\t" + std::to_string(egos));
    write_tsv(dir + "/fig4d.tsv", "circles\tegos", rows);
  }
  {
    std::vector<std::string> rows;
    for (const auto& r : tables.author_rows) {
      std::ostringstream row;
      row << r.author << '\t' << r.citations << '\t' << r.mean_cliquishness
          << '\t' << r.mean_field_cliquishness;
      rows.push_back(row.str());
    }
    write_tsv(dir + "/fig5a.tsv",
              "author\tcitations\tmodel_cliquishness\tfield_cliquishness", rows);
  }
  {
    std::vector<std::string> rows;
    static const char* zone_names[4] = {">200", "101-200", "31-100", "<=30"};
    for (int z = 0; z < 4; ++z) {
      std::ostringstream row;
      row << zone_names[z] << '\t' << tables.mean_homogeneity_by_zone[z] << '\t'
          << tables.zone_circle_counts[z];
      rows.push_back(row.str());
    }
    write_tsv(dir + "/fig5b.tsv", "citation_zone\tmean_homogeneity\tcircles", rows);
  }
  {
    std::vector<std::string> rows;
    for (const auto& r : tables.field_fractions) {
      std::ostringstream row;
      row << r.author << '\t' << static_cast<int>(r.band);
      for (double f : r.fractions) row << '\t' << f;
      rows.push_back(row.str());
    }
    std::string header = "author\tband";
    for (int f = 0; f < circles::kFieldCount; ++f)
      header += "\tfield_" + std::to_string(f);
    write_tsv(dir + "/fig6.tsv", header, rows);
  }

  Json config_echo;
  config_echo["corpus"] = opt.common.corpus_path;
  config_echo["circles"] = opt.circles_path;
  config_echo["cutoff_year"] = cutoff_year;
  config_echo["bin_width"] = opt.bin_width;

  Json summary;
  summary["meta"] = circles::make_meta("eval", config_echo);
  summary["mean_qov"] = tables.mean_qov;
  summary["egos_total"] = tables.egos_total;
  summary["egos_with_circles"] = tables.egos_with_circles;
  static const char* band_names[3] = {"low", "medium", "high"};
  for (int b = 0; b < 3; ++b) {
    Json bj;
    bj["egos"] = tables.bands[b].egos;
    bj["mean_circle_count"] = tables.bands[b].mean_circle_count;
    bj["mean_circle_size"] = tables.bands[b].mean_circle_size;
    bj["mean_cliquishness"] = tables.bands[b].mean_cliquishness;
    bj["mean_memberships"] = tables.bands[b].mean_memberships;
    summary["bands"][band_names[b]] = bj;
  }
  circles::write_json_atomic(dir + "/summary.json", summary);

  std::cout << "eval: " << tables.egos_total << " egos, mean Q_ov "
            << tables.mean_qov << " -> " << dir << "\n";
  return 0;
}

// --------------------------------------------------------------- predict --

struct PredictOptions {
  CommonOptions common;
  int train_end = 1995;
  std::string window = "1996:1999";
  std::string mode = "NE";
  std::string model = "lr";
  std::string circles_path;
  std::uint64_t seed = 0;
  int neg_per_pos = 5;
  double lr_rate = 0.5;
  int lr_epochs = 400;
  double lr_l2 = 1e-4;
  double srw_restart = 0.15;
  int srw_epochs = 25;
  double srw_rate = 1.0;
  std::string out_path = "report.json";
};

int run_predict(const PredictOptions& opt) {
  const auto config = resolve_config(opt.common.config_path);
  const auto corpus = circles::load_corpus(opt.common.corpus_path,
                                           parse_format(opt.common.format), config);

  circles::PredictConfig pc;
  pc.mode = circles::parse_feature_mode(opt.mode);
  if (opt.model == "lr") {
    pc.model = circles::PredictConfig::Model::kLr;
  } else if (opt.model == "srw") {
    pc.model = circles::PredictConfig::Model::kSrw;
  } else {
    throw CLI::ValidationError("--model", "must be lr or srw");
  }
  const auto [wstart, wend] = parse_window(opt.window);
  pc.split = {opt.train_end, wstart, wend};
  pc.seed = opt.seed;
  pc.neg_per_pos = opt.neg_per_pos;
  pc.lr = {opt.lr_rate, opt.lr_epochs, opt.lr_l2};
  pc.srw.restart = opt.srw_restart;
  pc.srw.epochs = opt.srw_epochs;
  pc.srw.learning_rate = opt.srw_rate;

  circles::CircleMembershipIndex index;
  const bool needs_circles = pc.mode == circles::FeatureMode::kNEB ||
                             pc.mode == circles::FeatureMode::kNEBC;
  if (needs_circles) {
    if (opt.circles_path.empty())
      throw CLI::ValidationError("--circles", "required for modes NEB/NEBC");
    const Json doc = circles::load_json(opt.circles_path);
    std::vector<std::vector<std::string>> circle_members;
    for (const auto& det : circles::detections_from_json(doc.at("egos")))
      for (const auto& members : det.circles) circle_members.push_back(members);
    index = circles::CircleMembershipIndex(circle_members);
  }

  const auto report = circles::run_prediction(corpus, index, pc);

  Json config_echo;
  config_echo["corpus"] = opt.common.corpus_path;
  config_echo["train_end"] = opt.train_end;
  config_echo["window"] = opt.window;
  config_echo["mode"] = opt.mode;
  config_echo["model"] = opt.model;
  config_echo["circles"] = opt.circles_path;
  config_echo["seed"] = opt.seed;
  config_echo["neg_per_pos"] = opt.neg_per_pos;
  config_echo["lr"] = {{"learning_rate", opt.lr_rate},
                       {"epochs", opt.lr_epochs},
                       {"l2", opt.lr_l2}};
  config_echo["srw"] = {{"restart", opt.srw_restart},
                        {"epochs", opt.srw_epochs},
                        {"learning_rate", opt.srw_rate}};

  Json doc;
  doc["meta"] = circles::make_meta("predict", config_echo);
  Json result;
  result["auc"] = report.auc;
  result["prec_at_20"] = report.prec_at_20;
  result["fit_positives"] = report.fit_positives;
  result["fit_negatives"] = report.fit_negatives;
  result["eval_positives"] = report.eval_positives;
  result["eval_negatives"] = report.eval_negatives;
  result["sources_evaluated"] = report.sources_evaluated;
  doc["result"] = result;
  circles::write_json_atomic(opt.out_path, doc);

  std::cout << "predict: mode " << opt.mode << " model " << opt.model
            << " auc " << report.auc << " prec@20 " << report.prec_at_20
            << " -> " << opt.out_path << "\n";
  return 0;
}

// ----------------------------------------------------------------- synth --

struct SynthOptions {
  std::string kind = "corpus";
  std::uint64_t seed = 0;
  std::string out_path;
  std::string truth_path;
  // corpus knobs
  int clusters = 6;
  int authors_per_cluster = 18;
  int train_papers = 30;
  int bridge_papers = 60;
  int future_edges = 150;
  double signal = 0.9;
  int first_year = 1976;
  int train_end = 1995;
  std::string window = "1996:1999";
  // ego knobs
  std::string sizes = "8,10,12";
  double overlap = 0.0;
  double p_in = 0.8;
  double p_out = 0.05;
  double sigma_within = 0.02;
  double sigma_between = 0.3;
};

int run_synth(const SynthOptions& opt) {
  if (opt.kind == "corpus") {
    circles::TemporalCorpusSpec spec;
    spec.clusters = opt.clusters;
    spec.authors_per_cluster = opt.authors_per_cluster;
    spec.train_papers_per_cluster = opt.train_papers;
    spec.bridge_papers = opt.bridge_papers;
    spec.future_edges = opt.future_edges;
    spec.signal_strength = opt.signal;
    spec.first_year = opt.first_year;
    spec.train_end = opt.train_end;
    const auto [wstart, wend] = parse_window(opt.window);
    spec.window_start = wstart;
    spec.window_end = wend;
    spec.seed = opt.seed;

    const auto corpus = circles::generate_temporal_corpus(spec);
    circles::save_corpus_csv(corpus, opt.out_path);

    if (!opt.truth_path.empty()) {
      Json truth;
      Json clusters_json = Json::array();
      const int n = spec.clusters * spec.authors_per_cluster;
      const int width = n > 100 ? 3 : 2;
      for (int c = 0; c < spec.clusters; ++c) {
        Json members = Json::array();
        for (int i = 0; i < spec.authors_per_cluster; ++i) {
          std::string digits = std::to_string(c * spec.authors_per_cluster + i);
          while (static_cast<int>(digits.size()) < width) digits.insert(0, "0");
          members.push_back("v" + digits);
        }
        clusters_json.push_back(members);
      }
      truth["clusters"] = clusters_json;
      circles::write_json_atomic(opt.truth_path, truth);
    }
    std::cout << "synth: corpus with " << corpus.size() << " papers -> "
              << opt.out_path << "\n";
    return 0;
  }

  if (opt.kind == "ego") {
    circles::PlantedEgoSpec spec;
    spec.sizes = parse_sizes(opt.sizes);
    spec.overlap_fraction = opt.overlap;
    spec.p_in = opt.p_in;
    spec.p_out = opt.p_out;
    spec.sigma_within = opt.sigma_within;
    spec.sigma_between = opt.sigma_between;
    spec.seed = opt.seed;
    const auto ego = circles::generate_ego(spec);

    Json doc;
    doc["ego"] = ego.net.ego_id;
    doc["alters"] = ego.net.alters;
    Json edges = Json::array();
    for (const auto& [a, b] : ego.net.edges)
      edges.push_back(Json::array({a, b}));
    doc["edges"] = edges;
    doc["profiles"] = ego.profiles;
    circles::write_json_atomic(opt.out_path, doc);

    if (!opt.truth_path.empty()) {
      Json truth;
      truth["circles"] = ego.truth.circles;
      circles::write_json_atomic(opt.truth_path, truth);
    }
    std::cout << "synth: ego network with " << ego.net.alter_count()
              << " alters -> " << opt.out_path << "\n";
    return 0;
  }

  throw CLI::ValidationError("--kind", "must be corpus or ego");
}

// ---------------------------------------------------------------- report --

int run_report(const std::string& in_path) {
  const Json doc = circles::load_json(in_path);
  const std::string command =
      doc.contains("meta") ? doc["meta"].value("command", "?") : "?";

  if (command == "detect") {
    const auto dets = circles::detections_from_json(doc.at("egos"));
    std::size_t total = 0;
    double ll = 0.0;
    for (const auto& d : dets) {
      total += d.circles.size();
      ll += d.log_likelihood;
    }
    std::cout << "detect output: " << dets.size() << " egos, " << total
              << " circles, mean final log-likelihood "
              << (dets.empty() ? 0.0 : ll / dets.size()) << "\n";
  } else if (command == "predict") {
    const auto& r = doc.at("result");
    std::cout << "predict output: mode "
              << doc["meta"]["config"].value("mode", "?") << " model "
              << doc["meta"]["config"].value("model", "?") << " AUC "
              << r.value("auc", 0.0) << " Prec@20 " << r.value("prec_at_20", 0.0)
              << "\n";
  } else if (command == "eval") {
    std::cout << "eval output: mean Q_ov " << doc.value("mean_qov", 0.0)
              << " over " << doc.value("egos_with_circles", 0LL) << "/"
              << doc.value("egos_total", 0LL) << " egos\n";
  } else {
    std::cout << "unrecognized payload (command: " << command << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ego-centric circle detection and evaluation for co-authorship networks"};
  app.set_version_flag("--version", circles::kToolVersion);
  app.require_subcommand(1);

  DetectOptions detect_opt;
  auto* detect_cmd = app.add_subcommand("detect", "detect circles per ego network");
  detect_cmd->add_option("--corpus", detect_opt.common.corpus_path, "corpus file")->required();
  detect_cmd->add_option("--format", detect_opt.common.format, "csv or jsonl");
  detect_cmd->add_option("--config", detect_opt.common.config_path, "field/decade config file");
  detect_cmd->add_option("--cutoff-year", detect_opt.cutoff_year, "snapshot cutoff year");
  detect_cmd->add_option("--tau-l", detect_opt.tau_l, "lower circle threshold");
  detect_cmd->add_option("--seed", detect_opt.seed, "rng seed")->required();
  detect_cmd->add_option("--min-alters", detect_opt.min_alters, "minimum alters per ego");
  detect_cmd->add_option("--threads", detect_opt.threads, "worker threads");
  detect_cmd->add_option("--max-iterations", detect_opt.max_iterations, "iteration cap (0: 200*|V|)");
  detect_cmd->add_option("--patience", detect_opt.patience, "rejections before stop (0: |V|)");
  detect_cmd->add_option("--out", detect_opt.out_path, "output circles.json");
  detect_cmd->add_option("--dump-profiles", detect_opt.dump_profiles_path, "write per-(ego,alter) profile CSV");

  EvalOptions eval_opt;
  auto* eval_cmd = app.add_subcommand("eval", "summarize detected circles");
  eval_cmd->add_option("--corpus", eval_opt.common.corpus_path, "corpus file")->required();
  eval_cmd->add_option("--format", eval_opt.common.format, "csv or jsonl");
  eval_cmd->add_option("--config", eval_opt.common.config_path, "field/decade config file");
  eval_cmd->add_option("--circles", eval_opt.circles_path, "circles.json from detect")->required();
  eval_cmd->add_option("--out-dir", eval_opt.out_dir, "directory for tables");
  eval_cmd->add_option("--bin-width", eval_opt.bin_width, "similarity bin width");

  PredictOptions predict_opt;
  auto* predict_cmd = app.add_subcommand("predict", "temporal collaboration prediction");
  predict_cmd->add_option("--corpus", predict_opt.common.corpus_path, "corpus file")->required();
  predict_cmd->add_option("--format", predict_opt.common.format, "csv or jsonl");
  predict_cmd->add_option("--config", predict_opt.common.config_path, "field/decade config file");
  predict_cmd->add_option("--train-end", predict_opt.train_end, "training cutoff year");
  predict_cmd->add_option("--window", predict_opt.window, "test window start:end");
  predict_cmd->add_option("--mode", predict_opt.mode, "N, E, NE, NEB or NEBC");
  predict_cmd->add_option("--model", predict_opt.model, "lr or srw");
  predict_cmd->add_option("--circles", predict_opt.circles_path, "circles.json (NEB/NEBC)");
  predict_cmd->add_option("--seed", predict_opt.seed, "rng seed")->required();
  predict_cmd->add_option("--neg-per-pos", predict_opt.neg_per_pos, "negatives per positive");
  predict_cmd->add_option("--lr-rate", predict_opt.lr_rate, "LR learning rate");
  predict_cmd->add_option("--lr-epochs", predict_opt.lr_epochs, "LR epochs");
  predict_cmd->add_option("--lr-l2", predict_opt.lr_l2, "LR L2 penalty");
  predict_cmd->add_option("--srw-restart", predict_opt.srw_restart, "SRW restart probability");
  predict_cmd->add_option("--srw-epochs", predict_opt.srw_epochs, "SRW training epochs");
  predict_cmd->add_option("--srw-rate", predict_opt.srw_rate, "SRW learning rate");
  predict_cmd->add_option("--out", predict_opt.out_path, "output report.json");

  SynthOptions synth_opt;
  auto* synth_cmd = app.add_subcommand("synth", "generate synthetic fixtures");
  synth_cmd->add_option("--kind", synth_opt.kind, "corpus or ego");
  synth_cmd->add_option("--seed", synth_opt.seed, "rng seed")->required();
  synth_cmd->add_option("--out", synth_opt.out_path, "output file")->required();
  synth_cmd->add_option("--truth-out", synth_opt.truth_path, "planted truth JSON");
  synth_cmd->add_option("--clusters", synth_opt.clusters, "author clusters");
  synth_cmd->add_option("--authors-per-cluster", synth_opt.authors_per_cluster, "authors per cluster");
  synth_cmd->add_option("--train-papers", synth_opt.train_papers, "training papers per cluster");
  synth_cmd->add_option("--bridge-papers", synth_opt.bridge_papers, "cross-cluster papers");
  synth_cmd->add_option("--future-edges", synth_opt.future_edges, "new edges in the window");
  synth_cmd->add_option("--signal", synth_opt.signal, "future-edge cluster correlation");
  synth_cmd->add_option("--first-year", synth_opt.first_year, "earliest paper year");
  synth_cmd->add_option("--train-end", synth_opt.train_end, "training cutoff year");
  synth_cmd->add_option("--window", synth_opt.window, "test window start:end");
  synth_cmd->add_option("--sizes", synth_opt.sizes, "circle sizes, comma separated");
  synth_cmd->add_option("--overlap", synth_opt.overlap, "circle overlap fraction");
  synth_cmd->add_option("--p-in", synth_opt.p_in, "intra-circle edge probability");
  synth_cmd->add_option("--p-out", synth_opt.p_out, "cross-circle edge probability");
  synth_cmd->add_option("--sigma-within", synth_opt.sigma_within, "profile noise");
  synth_cmd->add_option("--sigma-between", synth_opt.sigma_between, "centroid separation");

  std::string report_in;
  auto* report_cmd = app.add_subcommand("report", "print a summary of an output file");
  report_cmd->add_option("--in", report_in, "any output JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return 2;
  }

  try {
    if (*detect_cmd) return run_detect(detect_opt);
    if (*eval_cmd) return run_eval(eval_opt);
    if (*predict_cmd) return run_predict(predict_opt);
    if (*synth_cmd) return run_synth(synth_opt);
    if (*report_cmd) return run_report(report_in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
