// Runs every battery at its full configured size and prints one line per
// criterion. Exit status is the number of failing criteria.

#include <cstdio>
#include <exception>
#include <string>

#include "asg/harness.hpp"
#include "asg/io.hpp"

int main(int argc, char** argv) {
  using namespace asg::harness;
  ExperimentConfig config;
  std::string report_path;
  try {
    for (int i = 1; i < argc; ++i) {
      const std::string arg = argv[i];
      if (arg == "--config" && i + 1 < argc) {
        config = ExperimentConfig::from_json(asg::io::read_json_file(argv[++i]));
      } else if (arg == "--report" && i + 1 < argc) {
        report_path = argv[++i];
      } else {
        std::fprintf(stderr, "usage: asg_acceptance [--config FILE] [--report FILE]\n");
        return 64;
      }
    }
    config.validate();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return 64;
  }

  int failed = 0;
  SuiteReport suite;
  for (int id : config.batteries) {
    const BatteryResult r = run_battery(id, config);
    std::printf("[%s] criterion %d %-28s cases=%llu\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                static_cast<unsigned long long>(r.cases));
    for (const std::string& f : r.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
    suite.batteries.push_back(r);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(config.batteries.size()) - failed,
              config.batteries.size());
  if (!report_path.empty()) asg::io::write_text(report_path, suite.to_json().dump(2) + "\n");
  return failed;
}
