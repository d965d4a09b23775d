// Statistical acceptance suite: one pass/fail line per criterion, nonzero
// exit on any failure. Thresholds and replicate budgets live in
// core/src/acceptance.cpp; this binary only selects, runs and reports.

#include <cstring>
#include <iostream>
#include <string>

#include "graphex/acceptance.hpp"
#include "graphex/io.hpp"

int main(int argc, char** argv) {
  graphex::SuiteOptions opt;
  opt.threads = 4;
  std::string out;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << arg << "\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--seed") {
      opt.seed = std::stoull(next());
    } else if (arg == "--threads") {
      opt.threads = static_cast<unsigned>(std::stoul(next()));
    } else if (arg == "--reps-scale") {
      opt.reps_scale = std::stod(next());
    } else if (arg == "--only") {
      for (std::string ids = next(); !ids.empty();) {
        size_t comma = ids.find(',');
        opt.only.push_back(std::stoi(ids.substr(0, comma)));
        ids = comma == std::string::npos ? "" : ids.substr(comma + 1);
      }
    } else if (arg == "--out") {
      out = next();
    } else if (arg == "--help") {
      std::cout << "usage: graphex_acceptance [--seed N] [--threads N] [--reps-scale X]\n"
                   "                          [--only id,id,...] [--out report.json]\n";
      return 0;
    } else {
      std::cerr << "unknown argument: " << arg << "\n";
      return 2;
    }
  }

  auto results = graphex::run_acceptance_suite(opt);
  bool all = true;
  for (const auto& r : results) {
    std::cout << graphex::format_criterion_line(r) << std::endl;
    all = all && r.pass;
  }
  if (!out.empty()) {
    graphex::write_file(out, graphex::suite_report_json(results, opt));
  }
  std::cout << (all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " (" << results.size()
            << " run)" << std::endl;
  return all ? 0 : 1;
}
