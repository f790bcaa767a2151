#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pft/error.hpp"
#include "pft/experiments.hpp"

namespace {

enum ExitCode { kOk = 0, kInvalid = 1, kNumerical = 2, kVerifyFailed = 3 };

int exit_code_for(pft::ErrorKind kind) {
  switch (kind) {
    case pft::ErrorKind::NotUnitary:
    case pft::ErrorKind::NumericalFailure:
      return kNumerical;
    default:
      return kInvalid;
  }
}

void fail_line(std::string_view kind, std::string_view message) {
  std::cerr << "pft-error: " << kind << ": " << message << "\n";
}

struct Options {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out;
  std::string format;
  std::optional<std::uint64_t> seed;
  bool record_timing = false;
};

nlohmann::json load_config(const Options& o) {
  nlohmann::json config = nlohmann::json::object();
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw pft::Error(pft::ErrorKind::InvalidArgument, "config: cannot open '" + o.config_path + "'");
    config = nlohmann::json::parse(in, nullptr, false);
    if (config.is_discarded()) {
      throw pft::Error(pft::ErrorKind::InvalidArgument, "config: '" + o.config_path + "' is not valid JSON");
    }
  }
  for (const auto& s : o.overrides) pft::apply_override(config, s);
  if (!o.out.empty()) config["out"] = o.out;
  if (!o.format.empty()) config["format"] = o.format;
  if (o.seed) config["seed"] = *o.seed;
  if (o.record_timing) config["record_timing"] = true;
  return config;
}

int run(pft::ExperimentKind kind, const Options& o) {
  const pft::ExperimentConfig config = pft::parse_config(kind, load_config(o));
  const pft::ResultRecord record = pft::run_experiment(config);
  if (config.out) {
    pft::emit(record, config.format, *config.out);
  } else {
    std::cout << pft::to_string(record, config.format);
  }
  if (kind == pft::ExperimentKind::Verify) {
    for (const auto& [name, value] : record.scalars) {
      if (name == "all_passed" && !std::get<bool>(value)) return kVerifyFailed;
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect state transfer on engineered lattices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pft::kToolVersion));

  Options options;
  const std::map<std::string, std::string> about{
      {"couplings", "print the engineered coupling profile"},
      {"evolve", "transfer a polynomial Fock state and compare with its mirror"},
      {"fidelity", "single-particle transfer fidelity at one time"},
      {"sweep", "single-particle transfer fidelity over a time grid"},
      {"disorder", "transfer fidelity under random coupling perturbations"},
      {"dressing", "transfer under a unitarily dressed Hamiltonian"},
      {"verify", "run the acceptance checks"}};

  std::vector<std::pair<CLI::App*, pft::ExperimentKind>> commands;
  for (const auto& [name, text] : about) {
    CLI::App* sub = app.add_subcommand(name, text);
    sub->add_option("--config", options.config_path, "JSON configuration file")->check(CLI::ExistingFile);
    sub->add_option("--set", options.overrides, "override a configuration field (key=value)");
    sub->add_option("--out", options.out, "output path (stdout when absent)");
    sub->add_option("--format", options.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", options.seed, "random seed");
    sub->add_flag("--record-timing", options.record_timing, "include wall time in the record");
    commands.emplace_back(sub, *pft::parse_experiment_kind(name));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail_line("invalid-argument", e.what());
    return kInvalid;
  }

  try {
    for (const auto& [sub, kind] : commands) {
      if (sub->parsed()) return run(kind, options);
    }
  } catch (const pft::Error& e) {
    fail_line(pft::to_string(e.kind()), e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    fail_line("numerical-failure", e.what());
    return kNumerical;
  }
  return kInvalid;
}
