#include "graphex/experiments.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "graphex/errors.hpp"
#include "graphex/io.hpp"
#include "graphex/version.hpp"

namespace graphex {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError(std::string("invalid JSON in ") + what);
  return j;
}

std::vector<double> sequence_from_source(const json& src, bool integral) {
  std::vector<double> out;
  if (src.contains("path")) {
    if (integral) {
      for (uint32_t d : read_degrees(src.at("path").get<std::string>())) out.push_back(d);
    } else {
      out = read_weights(src.at("path").get<std::string>());
    }
    return out;
  }
  if (src.contains("values")) {
    for (const auto& v : src.at("values")) out.push_back(v.get<double>());
    return out;
  }
  if (src.contains("blocks")) {
    for (const auto& b : src.at("blocks")) {
      uint64_t count = b.at("count").get<uint64_t>();
      double value = b.contains("degree") ? b.at("degree").get<double>() : b.at("weight").get<double>();
      for (uint64_t i = 0; i < count; ++i) out.push_back(value);
    }
    return out;
  }
  throw ConfigError("sequence source needs one of: path, values, blocks");
}

std::vector<uint32_t> degree_sequence_from_source(const json& src) {
  std::vector<uint32_t> out;
  for (double v : sequence_from_source(src, true)) {
    if (v < 0 || v != std::floor(v)) throw ConfigError("degrees must be nonnegative integers");
    out.push_back(static_cast<uint32_t>(v));
  }
  return out;
}

std::string hash_hex(const std::string& text) {
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(text);
  return ss.str();
}

void emit(const CliOptions& opt, const std::string& content, const std::string& suffix,
          std::ostream& log) {
  if (opt.out.empty()) {
    log << content << '\n';
  } else {
    write_file(opt.out + suffix, content);
  }
}

json report_skeleton(const std::string& experiment, const json& parameters) {
  return json{{"experiment", experiment},
              {"parameters", parameters},
              {"config_hash", hash_hex(parameters.dump())},
              {"version", std::string(kVersion)}};
}

}  // namespace

ModelSpec model_from_json(const std::string& text) {
  json j = parse(text, "model spec");
  std::string family = j.at("family").get<std::string>();
  if (family == "cm" || family == "ecm") {
    DegreeSequence d(degree_sequence_from_source(j.at("degrees")));
    return family == "cm" ? ModelSpec::cm(std::move(d)) : ModelSpec::ecm(std::move(d));
  }
  if (family == "pa") {
    const json& src = j.contains("delta") ? j.at("delta") : j.at("weights");
    WeightSequence delta(sequence_from_source(src, false));
    return ModelSpec::pa(std::move(delta), j.at("m").get<uint64_t>());
  }
  if (family == "grg") {
    return ModelSpec::grg(WeightSequence(sequence_from_source(j.at("weights"), false)));
  }
  if (family == "bcm") {
    return ModelSpec::bcm(BipartiteDegrees(degree_sequence_from_source(j.at("side1")),
                                           degree_sequence_from_source(j.at("side2"))));
  }
  throw ConfigError("unknown model family: " + family);
}

Multigraphex auto_graphex_for(const ModelSpec& model, double hub_threshold) {
  switch (model.family) {
    case ModelSpec::Family::kCm:
    case ModelSpec::Family::kEcm:
      return limit_of_cm(*model.degrees, hub_threshold);
    case ModelSpec::Family::kPa:
      return limit_of_pa(*model.weights, model.pa_steps, hub_threshold);
    case ModelSpec::Family::kGrg:
      return limit_of_grg(*model.weights, hub_threshold);
    case ModelSpec::Family::kBcm:
      return limit_of_bcm(*model.bipartite, hub_threshold);
  }
  throw ConfigError("auto graphex: unknown family");
}

int cmd_generate(const GenerateConfig& cfg, const CliOptions& opt, std::ostream& log) {
  std::ostringstream summary;
  summary << "rep,n_vertices,non_loop_edges,loops,total_half_edges\n";
  for (uint64_t rep = 0; rep < cfg.reps; ++rep) {
    Rng rng = Rng::stream(opt.seed, "gen", rep);
    Multigraph g = draw_model(cfg.model, rng);
    summary << rep << ',' << g.vertex_count() << ',' << g.non_loop_edge_count() << ','
            << g.loop_mult_sum() << ',' << g.total_half_edges() << '\n';
    if (opt.format == "json") {
      std::string text = multigraph_to_json(g);
      if (opt.out.empty()) {
        log << text << '\n';
      } else if (cfg.reps == 1) {
        write_file(opt.out, text);
      } else {
        std::ostringstream name;
        name << opt.out << '_' << std::setw(6) << std::setfill('0') << rep << ".json";
        write_file(name.str(), text);
      }
    }
  }
  if (!opt.out.empty() && (cfg.reps > 1 || opt.format == "csv")) {
    write_file(opt.out + "_summary.csv", summary.str());
  }
  log << "generated " << cfg.reps << " graph(s)\n";
  return 0;
}

int cmd_sample(const SampleConfig& cfg, const CliOptions& opt, std::ostream& log) {
  if (cfg.p.has_value() == cfg.t.has_value()) {
    throw ConfigError("sample: exactly one of p or t is required");
  }
  for (uint64_t rep = 0; rep < cfg.reps; ++rep) {
    Rng rng = Rng::stream(opt.seed, "sample", rep);
    Multigraph s = cfg.p ? p_sample(cfg.graph, *cfg.p, rng) : canonical_sample(cfg.graph, *cfg.t, rng);
    std::string text = multigraph_to_json(s);
    if (opt.out.empty()) {
      log << text << '\n';
    } else if (cfg.reps == 1) {
      write_file(opt.out, text);
    } else {
      std::ostringstream name;
      name << opt.out << '_' << std::setw(6) << std::setfill('0') << rep << ".json";
      write_file(name.str(), text);
    }
  }
  return 0;
}

int cmd_census(const CensusConfig& cfg, const CliOptions& opt, std::ostream& log) {
  Census census;
  for (uint64_t rep = 0; rep < cfg.reps; ++rep) {
    Rng rng = Rng::stream(opt.seed, "census", rep);
    Multigraph g = draw_model(cfg.model, rng);
    census.add(canonical_sample(g, cfg.t, rng));
  }
  emit(opt, opt.format == "csv" ? census_to_csv(census) : census_to_json(census),
       opt.format == "csv" ? "_census.csv" : "_census.json", log);
  log << "census over " << census.total() << " samples, " << census.entries().size()
      << " classes\n";
  return 0;
}

ConvergeConfig converge_config_from_json(const std::string& text) {
  json j = parse(text, "converge config");
  ConvergeConfig cfg;
  cfg.model = model_from_json(j.at("model").dump());
  cfg.t = j.value("t", 1.0);
  cfg.threshold = j.value("threshold", 0.05);
  cfg.hub_threshold = j.value("hub_threshold", 0.1);
  cfg.reps = j.value("reps", uint64_t{10000});
  cfg.config_text = j.dump();
  if (j.contains("graphex") && j.at("graphex") != json("auto")) {
    cfg.graphex = graphex_from_json(j.at("graphex").dump());
  }
  return cfg;
}

int cmd_converge(const ConvergeConfig& cfg, const CliOptions& opt, std::ostream& log) {
  Multigraphex wx = cfg.graphex ? *cfg.graphex : auto_graphex_for(cfg.model, cfg.hub_threshold);
  ConvergenceOptions copt;
  copt.t = cfg.t;
  copt.reps_model = copt.reps_graphex = cfg.reps;
  copt.seed = opt.seed;
  copt.threads = opt.threads;
  ConvergenceResult res = convergence_experiment(cfg.model, wx, copt);

  bool pass = res.tv.value <= cfg.threshold;
  json params = parse(cfg.config_text.empty() ? "{}" : cfg.config_text, "converge config");
  params["seed"] = opt.seed;
  json report = report_skeleton("converge", params);
  report["statistic"] = res.tv.value;
  report["ci"] = res.tv.ci_half_width;
  report["reference"] = cfg.threshold;
  report["pass"] = pass;
  report["warnings"] = res.warnings;
  report["graphex"] = parse(graphex_to_json(wx), "graphex");

  if (!opt.out.empty()) {
    write_file(opt.out + "_report.json", report.dump(2));
    write_file(opt.out + "_model_census.csv", census_to_csv(res.model_census));
    write_file(opt.out + "_graphex_census.csv", census_to_csv(res.graphex_census));
  } else {
    log << report.dump(2) << '\n';
  }
  log << (pass ? "PASS" : "FAIL") << " converge: TV = " << res.tv.value
      << " (threshold " << cfg.threshold << ")\n";
  return pass ? 0 : 1;
}

int cmd_validate(const Multigraphex& wx, const CliOptions& opt, std::ostream& log) {
  ValidationReport rep = validate(wx);
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"note", c.note}});
  }
  json profile = json::array();
  for (const auto& [len, mu] : rep.mu_profile) profile.push_back({len, mu});
  json params = parse(graphex_to_json(wx), "graphex");
  json report = report_skeleton("validate", params);
  report["pass"] = rep.pass;
  report["checks"] = checks;
  report["mu_profile"] = profile;
  emit(opt, report.dump(2), "_validate.json", log);
  for (const auto& c : rep.checks) {
    log << (c.pass ? "  ok   " : "  FAIL ") << c.name << " = " << c.value
        << (c.note.empty() ? "" : "  (" + c.note + ")") << '\n';
  }
  log << (rep.pass ? "PASS" : "FAIL") << " validate\n";
  return rep.pass ? 0 : 1;
}

BlocksConfig blocks_config_from_json(const std::string& text) {
  json j = parse(text, "blocks config");
  BlocksConfig cfg;
  cfg.model = model_from_json(j.at("model").dump());
  cfg.reps = j.value("reps", uint64_t{10000});
  cfg.threshold = j.value("threshold", 0.05);
  cfg.config_text = j.dump();
  const json& blocks = j.at("blocks");
  if (blocks.is_object() && blocks.contains("sizes")) {
    uint64_t cursor = 0;
    for (const auto& s : blocks.at("sizes")) {
      std::vector<uint64_t> set(s.get<uint64_t>());
      for (auto& idx : set) idx = cursor++;
      cfg.blocks.sets.push_back(std::move(set));
    }
  } else {
    for (const auto& arr : blocks) {
      cfg.blocks.sets.push_back(arr.get<std::vector<uint64_t>>());
    }
  }
  return cfg;
}

int cmd_blocks(const BlocksConfig& cfg, const CliOptions& opt, std::ostream& log) {
  BlockCountResult res;
  switch (cfg.model.family) {
    case ModelSpec::Family::kCm:
      res = cm_block_edge_counts(*cfg.model.degrees, cfg.blocks, cfg.reps, {opt.seed, opt.threads});
      break;
    case ModelSpec::Family::kPa:
      res = pa_block_edge_counts(*cfg.model.weights, cfg.model.pa_steps, cfg.blocks, cfg.reps,
                                 {opt.seed, opt.threads});
      break;
    case ModelSpec::Family::kBcm:
      res = bcm_block_edge_counts(*cfg.model.bipartite, cfg.blocks, cfg.reps, {opt.seed, opt.threads});
      break;
    default:
      throw ConfigError("blocks: model family must be cm, pa or bcm");
  }
  bool pass = res.tv_vs_reference <= cfg.threshold;
  json params = parse(cfg.config_text, "blocks config");
  params["seed"] = opt.seed;
  json report = report_skeleton("blocks", params);
  report["statistic"] = res.tv_vs_reference;
  report["reference"] = cfg.threshold;
  report["pass"] = pass;
  report["rates"] = res.reference_rates;
  report["empirical_means"] = res.empirical_means;
  report["warnings"] = res.warnings;
  emit(opt, report.dump(2), "_blocks.json", log);
  log << (pass ? "PASS" : "FAIL") << " blocks: TV = " << res.tv_vs_reference << "\n";
  return pass ? 0 : 1;
}

int cmd_levy(const LevyConfig& cfg, const CliOptions& opt, std::ostream& log) {
  std::ostringstream csv;
  csv.precision(17);
  csv << "rep,time,value\n";
  for (uint64_t rep = 0; rep < cfg.reps; ++rep) {
    Rng rng = Rng::stream(opt.seed, "levy", rep);
    LevyPath path = levy_path_from_sequence(cfg.degrees, rng);
    double y = 0.0;
    csv << rep << ",0," << 0.0 << '\n';
    for (const auto& [time, size] : path.jumps()) {
      y += size;
      csv << rep << ',' << time << ',' << y << '\n';
    }
  }
  emit(opt, csv.str(), "_levy.csv", log);
  return 0;
}

int cmd_suite(const SuiteOptions& suite, const CliOptions& opt, std::ostream& log) {
  auto results = run_acceptance_suite(suite);
  bool all = true;
  for (const auto& r : results) {
    log << format_criterion_line(r) << '\n';
    all = all && r.pass;
  }
  std::string report = suite_report_json(results, suite);
  if (!opt.out.empty()) write_file(opt.out + "_suite.json", report);
  log << (all ? "PASS" : "FAIL") << " suite (" << results.size() << " criteria)\n";
  return all ? 0 : 1;
}

}  // namespace graphex
