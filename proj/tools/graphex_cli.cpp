// Batch experiment runner around the graphex library.
//
// Subcommands: gen, sample, census, converge, validate, suite, blocks, levy.
// Exit codes: 0 pass, 1 statistical failure, 2 configuration or I/O error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphex/errors.hpp"
#include "graphex/experiments.hpp"
#include "graphex/io.hpp"

namespace {

using namespace graphex;

std::string sequence_source_json(const std::string& path, const std::string& family) {
  if (!path.empty() && !family.empty()) {
    throw ConfigError("give either a file path or an inline --family, not both");
  }
  if (!path.empty()) return std::string("{\"path\":\"") + path + "\"}";
  if (!family.empty()) return family;
  throw ConfigError("a degree/weight source is required");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphex: sparse multigraph sampling-convergence toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand name

  uint64_t seed = 0;
  unsigned threads = 1;
  std::string out;
  std::string format = "json";
  app.add_option("--seed", seed, "master RNG seed")->required();
  app.add_option("--threads", threads, "worker threads for replicate loops");
  app.add_option("--out", out, "output path or prefix (default: stdout)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

  // gen
  auto* gen = app.add_subcommand("gen", "generate random graphs from a model");
  std::string model_name, degrees_path, weights_path, family, side1_path, side2_path, family2;
  uint64_t pa_m = 0, reps = 1;
  gen->add_option("--model", model_name, "cm|ecm|pa|grg|bcm")->required();
  gen->add_option("--degrees", degrees_path, "degree file (one per line or JSON array)");
  gen->add_option("--weights", weights_path, "weight file (grg) or delta file (pa)");
  gen->add_option("--family", family, "inline synthetic family JSON, e.g. {\"blocks\":[...]}");
  gen->add_option("--side1", side1_path, "bcm side-1 degree file");
  gen->add_option("--side2", side2_path, "bcm side-2 degree file");
  gen->add_option("--family2", family2, "bcm side-2 inline family");
  gen->add_option("--m", pa_m, "preferential attachment steps");
  gen->add_option("--reps", reps, "number of replicates");

  // sample
  auto* sample = app.add_subcommand("sample", "p-sample or canonically sample a graph");
  std::string graph_path;
  double p_rate = -1.0, t_rate = -1.0;
  uint64_t sample_reps = 1;
  sample->add_option("--graph", graph_path, "multigraph JSON file")->required();
  sample->add_option("--p", p_rate, "retention probability");
  sample->add_option("--t", t_rate, "canonical sampling time t");
  sample->add_option("--reps", sample_reps, "number of replicates");

  // census
  auto* census = app.add_subcommand("census", "census of canonical samples from a model");
  std::string c_model, c_degrees, c_weights, c_family, c_side1, c_side2;
  uint64_t c_m = 0, c_reps = 1000;
  double c_t = 1.0;
  census->add_option("--model", c_model, "cm|ecm|pa|grg|bcm")->required();
  census->add_option("--degrees", c_degrees, "degree file");
  census->add_option("--weights", c_weights, "weight/delta file");
  census->add_option("--family", c_family, "inline synthetic family JSON");
  census->add_option("--side1", c_side1, "bcm side-1 degree file");
  census->add_option("--side2", c_side2, "bcm side-2 degree file");
  census->add_option("--m", c_m, "pa steps");
  census->add_option("--t", c_t, "canonical sampling time");
  census->add_option("--reps", c_reps, "number of replicates");

  // converge
  auto* converge = app.add_subcommand("converge", "model vs graphex census TV experiment");
  std::string converge_config;
  converge->add_option("--config", converge_config, "experiment config JSON file")->required();

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check multigraphex integrability conditions");
  std::string graphex_path, v_degrees, v_family;
  double v_hub = 0.1;
  validate_cmd->add_option("--graphex", graphex_path, "graphex spec JSON file");
  validate_cmd->add_option("--degrees", v_degrees, "degree file (validates limit_of_cm)");
  validate_cmd->add_option("--family", v_family, "inline family (validates limit_of_cm)");
  validate_cmd->add_option("--hub-threshold", v_hub, "hub threshold for auto limits");

  // suite
  auto* suite = app.add_subcommand("suite", "run the statistical acceptance suite");
  double reps_scale = 1.0;
  std::vector<int> only;
  suite->add_option("--reps-scale", reps_scale, "scale factor on replicate budgets");
  suite->add_option("--only", only, "criterion ids to run (default: all)");

  // blocks
  auto* blocks = app.add_subcommand("blocks", "block edge-count Poisson comparison");
  std::string blocks_config;
  blocks->add_option("--config", blocks_config, "blocks config JSON file")->required();

  // levy
  auto* levy = app.add_subcommand("levy", "emit Levy path step functions as CSV");
  std::string l_degrees, l_family;
  uint64_t l_reps = 1;
  levy->add_option("--degrees", l_degrees, "degree file");
  levy->add_option("--family", l_family, "inline synthetic family JSON");
  levy->add_option("--reps", l_reps, "number of paths");

  CLI11_PARSE(app, argc, argv);

  CliOptions opt{seed, threads, out, format};

  auto model_json = [](const std::string& fam_name, const std::string& deg, const std::string& wts,
                       const std::string& fam, const std::string& s1, const std::string& s2,
                       const std::string& fam2, uint64_t m) {
    std::string j = "{\"family\":\"" + fam_name + "\"";
    if (fam_name == "cm" || fam_name == "ecm") {
      j += ",\"degrees\":" + sequence_source_json(deg, fam);
    } else if (fam_name == "pa") {
      j += ",\"delta\":" + sequence_source_json(wts.empty() ? deg : wts, fam);
      j += ",\"m\":" + std::to_string(m);
    } else if (fam_name == "grg") {
      j += ",\"weights\":" + sequence_source_json(wts, fam);
    } else if (fam_name == "bcm") {
      j += ",\"side1\":" + sequence_source_json(s1, fam);
      j += ",\"side2\":" + sequence_source_json(s2, fam2);
    } else {
      throw ConfigError("unknown model family: " + fam_name);
    }
    return j + "}";
  };

  try {
    if (*gen) {
      GenerateConfig cfg{model_from_json(model_json(model_name, degrees_path, weights_path, family,
                                                    side1_path, side2_path, family2, pa_m)),
                         reps};
      return cmd_generate(cfg, opt, std::cout);
    }
    if (*sample) {
      SampleConfig cfg{multigraph_from_json(read_file(graph_path)), std::nullopt, std::nullopt,
                       sample_reps};
      if (p_rate >= 0.0) cfg.p = p_rate;
      if (t_rate >= 0.0) cfg.t = t_rate;
      return cmd_sample(cfg, opt, std::cout);
    }
    if (*census) {
      CensusConfig cfg{model_from_json(model_json(c_model, c_degrees, c_weights, c_family, c_side1,
                                                  c_side2, c_family, c_m)),
                       c_t, c_reps};
      return cmd_census(cfg, opt, std::cout);
    }
    if (*converge) {
      return cmd_converge(converge_config_from_json(read_file(converge_config)), opt, std::cout);
    }
    if (*validate_cmd) {
      if (!graphex_path.empty()) {
        return cmd_validate(graphex_from_json(read_file(graphex_path)), opt, std::cout);
      }
      if (v_degrees.empty() && v_family.empty()) {
        throw ConfigError("validate: --graphex, --degrees or --family required");
      }
      ModelSpec spec = model_from_json("{\"family\":\"cm\",\"degrees\":" +
                                       sequence_source_json(v_degrees, v_family) + "}");
      return cmd_validate(limit_of_cm(*spec.degrees, v_hub), opt, std::cout);
    }
    if (*suite) {
      SuiteOptions sopt;
      sopt.seed = seed;
      sopt.reps_scale = reps_scale;
      sopt.threads = threads;
      sopt.only = only;
      return cmd_suite(sopt, opt, std::cout);
    }
    if (*blocks) {
      return cmd_blocks(blocks_config_from_json(read_file(blocks_config)), opt, std::cout);
    }
    if (*levy) {
      std::vector<uint32_t> degs;
      if (!l_degrees.empty()) {
        degs = read_degrees(l_degrees);
      } else if (!l_family.empty()) {
        ModelSpec spec = model_from_json("{\"family\":\"cm\",\"degrees\":" + l_family + "}");
        degs = spec.degrees->degrees();
      } else {
        throw ConfigError("levy: --degrees or --family required");
      }
      LevyConfig cfg{DegreeSequence(degs), l_reps};
      return cmd_levy(cfg, opt, std::cout);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
