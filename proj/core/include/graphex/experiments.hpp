#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "graphex/acceptance.hpp"
#include "graphex/analysis.hpp"
#include "graphex/multigraphex.hpp"

namespace graphex {

// Options shared by every subcommand. The seed is mandatory at the CLI
// boundary; reports embed the config hash and library version and are
// byte-identical across runs and thread counts for a fixed config.
struct CliOptions {
  uint64_t seed = 0;
  unsigned threads = 1;
  std::string out;                // output path or prefix; empty = stdout only
  std::string format = "json";    // "json" or "csv" where applicable
};

// Model description, e.g.
//   {"family":"cm","degrees":{"blocks":[{"count":50,"degree":100},
//                                       {"count":5000,"degree":1}]}}
//   {"family":"pa","delta":{"path":"delta.txt"},"m":5000}
//   {"family":"grg","weights":{"values":[1,1,2]}}
//   {"family":"bcm","side1":{...},"side2":{...}}
// Sequence sources: {"path": file}, {"values": [...]}, or the synthetic
// family DSL {"blocks":[{"count":n,"degree":d},...]} ("weight" for reals).
ModelSpec model_from_json(const std::string& text);

// Graphex for a converge config: an explicit spec (see graphex_from_json) or
// "auto", which maps cm/ecm -> limit_of_cm, pa -> limit_of_pa,
// grg -> limit_of_grg, bcm -> limit_of_bcm at the given hub threshold.
Multigraphex auto_graphex_for(const ModelSpec& model, double hub_threshold);

struct GenerateConfig {
  ModelSpec model;
  uint64_t reps = 1;
};
int cmd_generate(const GenerateConfig& cfg, const CliOptions& opt, std::ostream& log);

struct SampleConfig {
  Multigraph graph;
  std::optional<double> p;  // plain p-sampling
  std::optional<double> t;  // canonical rate t/sqrt(2e)
  uint64_t reps = 1;
};
int cmd_sample(const SampleConfig& cfg, const CliOptions& opt, std::ostream& log);

struct CensusConfig {
  ModelSpec model;
  double t = 1.0;
  uint64_t reps = 1000;
};
int cmd_census(const CensusConfig& cfg, const CliOptions& opt, std::ostream& log);

struct ConvergeConfig {
  ModelSpec model;
  std::optional<Multigraphex> graphex;  // nullopt = "auto"
  double t = 1.0;
  double threshold = 0.05;
  double hub_threshold = 0.1;
  uint64_t reps = 10000;
  std::string config_text;  // original config for hashing
};
ConvergeConfig converge_config_from_json(const std::string& text);
// Exit code 0 iff TV <= threshold, else 1.
int cmd_converge(const ConvergeConfig& cfg, const CliOptions& opt, std::ostream& log);

// Exit code 0 iff all conditions pass, else 1.
int cmd_validate(const Multigraphex& wx, const CliOptions& opt, std::ostream& log);

struct BlocksConfig {
  ModelSpec model;
  BlockSpec blocks;
  uint64_t reps = 10000;
  double threshold = 0.05;
  std::string config_text;
};
BlocksConfig blocks_config_from_json(const std::string& text);
int cmd_blocks(const BlocksConfig& cfg, const CliOptions& opt, std::ostream& log);

struct LevyConfig {
  DegreeSequence degrees;
  uint64_t reps = 1;
};
int cmd_levy(const LevyConfig& cfg, const CliOptions& opt, std::ostream& log);

// Runs the acceptance suite, prints one line per criterion, writes the JSON
// report when an output path is set. Exit 0 iff every criterion passes.
int cmd_suite(const SuiteOptions& suite, const CliOptions& opt, std::ostream& log);

}  // namespace graphex
