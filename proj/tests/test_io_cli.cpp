#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "graphex/errors.hpp"
#include "graphex/experiments.hpp"
#include "graphex/io.hpp"

using namespace graphex;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("graphex_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct CommandResult {
  int exit_code;
  std::string output;
};

#ifdef GRAPHEX_CLI_PATH
CommandResult run_cli(const std::string& args) {
  std::string cmd = std::string(GRAPHEX_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}
#endif

}  // namespace

TEST_CASE("multigraph json round trip") {
  Multigraph g(4, {{0, 1, 2}, {2, 2, 1}, {1, 3, 1}});
  Multigraph back = multigraph_from_json(multigraph_to_json(g));
  CHECK(back == g);
  CHECK(multigraph_to_json(g).find("\"n\":4") != std::string::npos);
}

TEST_CASE("adjacency measure csv round trip") {
  AdjacencyMeasure xi;
  xi.window = 2.5;
  xi.points = {{0.25, 1.5, 2}, {0.75, 0.75, 1}};
  AdjacencyMeasure back = adjacency_from_csv(adjacency_to_csv(xi));
  CHECK(back.window == xi.window);
  REQUIRE(back.points.size() == 2);
  CHECK(back.points[0].x == xi.points[0].x);
  CHECK(back.points[0].mult == 2);
}

TEST_CASE("measure json and csv round trips") {
  DiscreteMeasure rho = DiscreteMeasure::from_atoms({{0.5, 2.0}, {1.5, 1.0}});
  auto [back, drift] = measure_from_json(measure_to_json(rho, 0.25));
  REQUIRE(drift.has_value());
  CHECK(*drift == 0.25);
  REQUIRE(back.atoms().size() == 2);
  CHECK(back.atoms()[1].location == 1.5);

  DiscreteMeasure from_csv = measure_from_csv(measure_to_csv(rho));
  CHECK(from_csv.total_mass() == doctest::Approx(rho.total_mass()));
}

TEST_CASE("census json carries representatives") {
  Census c;
  c.add(Multigraph(2, {{0, 1, 1}}));
  c.add(Multigraph(2, {{0, 1, 1}}));
  std::string j = census_to_json(c);
  CHECK(j.find("\"total\":2") != std::string::npos);
  CHECK(j.find("\"edges\":[[0,1,1]]") != std::string::npos);
  std::string csv = census_to_csv(c);
  CHECK(csv.find("0-1:1") != std::string::npos);
}

TEST_CASE("degree and weight files") {
  TempDir tmp;
  write_file(tmp.file("d.txt"), "3\n2\n1\n");
  CHECK(read_degrees(tmp.file("d.txt")) == std::vector<uint32_t>{3, 2, 1});
  write_file(tmp.file("d.json"), "[4, 5]");
  CHECK(read_degrees(tmp.file("d.json")) == std::vector<uint32_t>{4, 5});
  write_file(tmp.file("w.txt"), "1.5\n2.5\n");
  CHECK(read_weights(tmp.file("w.txt")) == std::vector<double>{1.5, 2.5});
  CHECK_THROWS_AS(read_degrees(tmp.file("missing.txt")), ConfigError);
}

TEST_CASE("graphex spec json round trip") {
  Multigraphex wx(RankOne{DiscreteMeasure::from_atoms({{1.0, 0.5}}), 0.5});
  Multigraphex back = graphex_from_json(graphex_to_json(wx));
  const auto& r = std::get<RankOne>(back.base());
  CHECK(r.a == 0.5);
  CHECK(r.rho.atoms()[0].location == 1.0);

  Multigraphex dust = graphex_from_json(R"({"variant":"pure_dust","I":0.5})");
  CHECK(std::get<PureDust>(dust.base()).isolated_rate == 0.5);

  Multigraphex scaled = graphex_from_json(R"({"variant":"pure_dust","I":0.5,"scale":4.0})");
  CHECK(scaled.dust_rate() == doctest::Approx(0.125));

  CHECK_THROWS_AS(graphex_from_json(R"({"variant":"nope"})"), ConfigError);
  CHECK(graphex_to_json(wx).find("rank_one") != std::string::npos);
}

TEST_CASE("model config parsing") {
  ModelSpec cm = model_from_json(
      R"({"family":"cm","degrees":{"blocks":[{"count":3,"degree":2},{"count":2,"degree":1}]}})");
  CHECK(cm.family == ModelSpec::Family::kCm);
  CHECK(cm.degrees->degrees() == std::vector<uint32_t>{2, 2, 2, 1, 1});

  ModelSpec pa = model_from_json(R"({"family":"pa","delta":{"values":[1,2,3]},"m":7})");
  CHECK(pa.pa_steps == 7);
  CHECK(pa.weights->total() == doctest::Approx(6.0));

  CHECK_THROWS_AS(model_from_json(R"({"family":"cm"})"), std::exception);
  CHECK_THROWS_AS(model_from_json(R"({"family":"zz","degrees":{"values":[1,1]}})"), ConfigError);
}

TEST_CASE("auto graphex selection") {
  ModelSpec cm = model_from_json(R"({"family":"cm","degrees":{"blocks":[{"count":400,"degree":1}]}})");
  Multigraphex wx = auto_graphex_for(cm, 0.1);
  CHECK(std::get<RankOne>(wx.base()).a == doctest::Approx(1.0));

  ModelSpec bcm = model_from_json(
      R"({"family":"bcm","side1":{"values":[2,1,1]},"side2":{"values":[1,1,1,1]}})");
  CHECK(std::holds_alternative<BipartiteGraphex>(auto_graphex_for(bcm, 0.1).base()));
}

TEST_CASE("cmd_generate writes deterministic outputs") {
  TempDir tmp;
  GenerateConfig cfg{model_from_json(R"({"family":"cm","degrees":{"values":[2,2,1,1]}})"), 3};
  CliOptions opt{1234, 1, tmp.file("run"), "json"};
  std::ostringstream log1;
  CHECK(cmd_generate(cfg, opt, log1) == 0);
  std::string first = read_file(tmp.file("run_000001.json"));

  CliOptions opt2{1234, 1, tmp.file("again"), "json"};
  std::ostringstream log2;
  CHECK(cmd_generate(cfg, opt2, log2) == 0);
  CHECK(read_file(tmp.file("again_000001.json")) == first);

  std::string summary = read_file(tmp.file("run_summary.csv"));
  CHECK(summary.find("rep,n_vertices") == 0);
}

TEST_CASE("cmd_converge pass and threshold-zero failure") {
  TempDir tmp;
  std::string config = R"({
    "model": {"family":"cm","degrees":{"blocks":[{"count":400,"degree":1}]}},
    "graphex": {"variant":"pure_dust","I":0.5},
    "t": 1.0, "reps": 4000, "threshold": 0.1})";
  ConvergeConfig cfg = converge_config_from_json(config);
  CliOptions opt{777, 2, tmp.file("cv"), "json"};
  std::ostringstream log;
  CHECK(cmd_converge(cfg, opt, log) == 0);
  std::string report = read_file(tmp.file("cv_report.json"));
  CHECK(report.find("\"pass\": true") != std::string::npos);
  CHECK(report.find("config_hash") != std::string::npos);
  CHECK(fs::exists(tmp.file("cv_model_census.csv")));

  ConvergeConfig strict = converge_config_from_json(config);
  strict.threshold = 0.0;
  std::ostringstream log2;
  CliOptions opt3{777, 2, "", "json"};
  CHECK(cmd_converge(strict, opt3, log2) == 1);
}

TEST_CASE("cmd_validate exit codes") {
  std::ostringstream log;
  CliOptions opt{1, 1, "", "json"};
  CHECK(cmd_validate(Multigraphex(PureDust{0.5}), opt, log) == 0);
  CHECK(cmd_validate(named_generic_graphex("const_one", 4.0), opt, log) == 1);
}

TEST_CASE("cmd_blocks runs a cm comparison") {
  std::string config = R"({
    "model": {"family":"cm","degrees":{"blocks":[{"count":100,"degree":4}]}},
    "blocks": {"sizes":[20, 20]},
    "reps": 2000, "threshold": 0.2})";
  BlocksConfig cfg = blocks_config_from_json(config);
  std::ostringstream log;
  CliOptions opt{31, 2, "", "json"};
  CHECK(cmd_blocks(cfg, opt, log) == 0);
}

TEST_CASE("report bytes are thread-count independent") {
  std::string config = R"({
    "model": {"family":"cm","degrees":{"blocks":[{"count":200,"degree":1}]}},
    "graphex": "auto", "t": 1.0, "reps": 2000, "threshold": 0.2})";
  TempDir tmp;
  std::ostringstream l1, l4;
  CliOptions opt1{99, 1, tmp.file("a"), "json"};
  CliOptions opt4{99, 4, tmp.file("b"), "json"};
  CHECK(cmd_converge(converge_config_from_json(config), opt1, l1) == 0);
  CHECK(cmd_converge(converge_config_from_json(config), opt4, l4) == 0);
  CHECK(read_file(tmp.file("a_report.json")) == read_file(tmp.file("b_report.json")));
  CHECK(read_file(tmp.file("a_model_census.csv")) == read_file(tmp.file("b_model_census.csv")));
}

#ifdef GRAPHEX_CLI_PATH

TEST_CASE("cli: gen is byte-identical for a fixed seed") {
  TempDir tmp;
  std::string family = R"('{"blocks":[{"count":10,"degree":2}]}')";
  auto r1 = run_cli("gen --seed 7 --model cm --family " + family + " --out " + tmp.file("x.json"));
  CHECK(r1.exit_code == 0);
  auto r2 = run_cli("gen --seed 7 --model cm --family " + family + " --out " + tmp.file("y.json"));
  CHECK(r2.exit_code == 0);
  CHECK(read_file(tmp.file("x.json")) == read_file(tmp.file("y.json")));
}

TEST_CASE("cli: missing degrees file exits 2") {
  auto r = run_cli("gen --seed 7 --model cm --degrees /nonexistent/d.txt");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("config error") != std::string::npos);
}

TEST_CASE("cli: missing seed is a usage error") {
  auto r = run_cli("gen --model cm --family '{\"blocks\":[{\"count\":2,\"degree\":1}]}'");
  CHECK(r.exit_code != 0);
}

TEST_CASE("cli: validate pure dust spec") {
  TempDir tmp;
  write_file(tmp.file("w.json"), R"({"variant":"pure_dust","I":0.5})");
  auto r = run_cli("validate --seed 1 --graphex " + tmp.file("w.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS validate") != std::string::npos);

  write_file(tmp.file("bad.json"), R"({"variant":"generic","kernel":"const_one"})");
  auto rb = run_cli("validate --seed 1 --graphex " + tmp.file("bad.json"));
  CHECK(rb.exit_code == 1);
}

TEST_CASE("cli: converge subcommand end to end") {
  TempDir tmp;
  write_file(tmp.file("cfg.json"), R"({
    "model": {"family":"cm","degrees":{"blocks":[{"count":300,"degree":1}]}},
    "graphex": "auto", "t": 1.0, "reps": 3000, "threshold": 0.1})");
  auto r = run_cli("converge --seed 5 --config " + tmp.file("cfg.json") + " --out " + tmp.file("cv"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS converge") != std::string::npos);
}

TEST_CASE("cli: levy emits csv") {
  auto r = run_cli("levy --seed 3 --family '{\"blocks\":[{\"count\":4,\"degree\":2}]}' --reps 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("rep,time,value") != std::string::npos);
}

TEST_CASE("cli: suite smoke run on one cheap criterion") {
  auto r = run_cli("suite --seed 11 --only 16 --threads 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[16] tail-regularity-statistic") != std::string::npos);
}

#endif  // GRAPHEX_CLI_PATH
