#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decaylab/experiments.hpp"
#include "decaylab/parallel.hpp"

namespace {

// "--key value" and "--key=value" pairs left over after CLI11 parsing.
std::map<std::string, std::string> parse_overrides(const std::vector<std::string>& extras) {
  std::map<std::string, std::string> kv;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& a = extras[i];
    if (a.rfind("--", 0) != 0 || a.size() < 3) throw decaylab::ConfigError("unexpected argument '" + a + "'");
    std::string key = a.substr(2);
    std::string value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key.resize(eq);
    } else {
      if (i + 1 >= extras.size()) throw decaylab::ConfigError("missing value for --" + key);
      value = extras[++i];
    }
    kv[key] = value;
  }
  return kv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decaylab: desk-scale checks of decay rates for Cayley transforms and inverse generators"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "print the experiment registry");
  auto* run = app.add_subcommand("run", "run one experiment; extra --key value pairs override parameters");
  std::string experiment, out, config;
  run->add_option("--experiment", experiment, "registry name")->required();
  run->add_option("--out", out, "output directory")->required();
  run->add_option("--config", config, "flat key=value file; command-line parameters win");
  run->allow_extras();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (list->parsed()) {
    std::cout << decaylab::list_text();
    return 0;
  }

  try {
    (void)decaylab::thread_count();  // rejects a malformed DECAYLAB_THREADS up front
    std::map<std::string, std::string> kv;
    if (!config.empty()) kv = decaylab::read_config_file(config);
    for (const auto& [k, v] : parse_overrides(run->remaining())) kv[k] = v;
    kv["experiment"] = experiment;
    kv["out"] = out;
    const decaylab::ExperimentConfig cfg = decaylab::parse_config(kv);
    const decaylab::ExperimentResult res = decaylab::run_experiment(cfg);
    decaylab::write_outputs(res, cfg.out);
    std::cout << decaylab::summary_json(res).dump(2) << '\n';
    if (res.numerical_failure) {
      std::cerr << "numerical failure: " << res.failure << '\n';
      return 3;
    }
    return res.pass ? 0 : 1;
  } catch (const decaylab::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  }
}
