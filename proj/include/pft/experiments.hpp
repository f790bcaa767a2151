#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pft/core_algebra.hpp"
#include "pft/fock.hpp"
#include "pft/record.hpp"

namespace pft {

enum class ExperimentKind { Couplings, Evolve, Fidelity, Sweep, Verify, Disorder, Dressing };

std::string_view to_string(ExperimentKind kind);
std::optional<ExperimentKind> parse_experiment_kind(std::string_view name);

/// Validated experiment description. Absent optionals take per-experiment
/// defaults when the experiment runs.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Verify;
  std::optional<LatticeDims> dims;
  std::vector<double> scales;  // empty: J = 1 on every axis
  Statistics statistics = Statistics::Boson;
  bool spinful = false;
  std::optional<PolynomialFunction> function;
  std::vector<ModeIndex> anchors;
  std::optional<SiteIndex> source;
  std::optional<SiteIndex> target;
  std::optional<double> t;
  std::vector<double> t_grid;
  std::optional<double> theta;
  std::string dressing = "lz";
  std::optional<double> epsilon;
  std::uint64_t seed = 0;
  int trials = 100;
  std::optional<std::string> out;
  OutputFormat format = OutputFormat::Csv;
  bool record_timing = false;

  /// FNV-1a of the canonical JSON form, excluding output-only fields.
  std::string hash;
};

/// Parses and validates a JSON configuration for the given experiment.
/// Unknown fields and malformed values raise Error(InvalidArgument) whose
/// message starts with the offending field name.
ExperimentConfig parse_config(ExperimentKind kind, const nlohmann::json& config);

/// Applies a "key=value" override; value is read as JSON when it parses,
/// otherwise as a string.
void apply_override(nlohmann::json& config, const std::string& assignment);

ResultRecord run_experiment(const ExperimentConfig& config);

}  // namespace pft
