#include "doctest.h"

#include <cmath>
#include <numbers>

#include "pft/error.hpp"
#include "pft/experiments.hpp"
#include "pft/record.hpp"

using namespace pft;
using nlohmann::json;

namespace {

std::string rejection(ExperimentKind kind, const json& config) {
  try {
    parse_config(kind, config);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
    return e.what();
  }
  FAIL("config was accepted");
  return {};
}

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_double(1.0) == "1.0");
  CHECK(format_double(-0.0) == "0.0");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1e-20) == "9.9999999999999995e-21");
  CHECK(format_double(std::sqrt(3.0) / 2) == "0.8660254037844386");
}

TEST_CASE("csv output") {
  ResultRecord empty;
  empty.series.columns = {"t", "fidelity"};
  CHECK(to_string(empty, OutputFormat::Csv) == "t,fidelity\n");

  ResultRecord phase;
  phase.add("phase", Complex(0.0, -1.0));
  CHECK(to_string(phase, OutputFormat::Csv) == "phase_re,phase_im\n0.0,-1.0\n");

  ResultRecord both;
  both.series.columns = {"n"};
  both.series.rows = {{std::int64_t{1}}, {std::int64_t{2}}};
  both.add("ok", true);
  CHECK(to_string(both, OutputFormat::Csv) == "n,ok\n1,true\n2,true\n");
}

TEST_CASE("json output") {
  ResultRecord r;
  r.experiment = "fidelity";
  r.config_hash = "abc";
  r.add("fidelity", 1.0);
  r.add("amplitude", Complex(0.0, -1.0));
  const std::string text = to_string(r, OutputFormat::Json);
  CHECK(text.find("\"fidelity\": 1.0") != std::string::npos);
  CHECK(text.back() == '\n');
  CHECK(text.find("duration_seconds") == std::string::npos);
  const json parsed = json::parse(text);
  CHECK(parsed["scalars"]["amplitude"] == json::array({0.0, -1.0}));
  CHECK(parsed["tool_version"] == kToolVersion);

  r.duration_seconds = 0.5;
  CHECK(json::parse(to_string(r, OutputFormat::Json))["duration_seconds"] == 0.5);
}

TEST_CASE("config validation") {
  CHECK(starts_with(rejection(ExperimentKind::Fidelity, {{"dims", {3}}, {"bogus", 1}}), "bogus"));
  CHECK(starts_with(rejection(ExperimentKind::Fidelity, json::object()), "dims"));
  CHECK(starts_with(rejection(ExperimentKind::Fidelity, {{"dims", "3x3"}}), "dims"));
  CHECK(starts_with(rejection(ExperimentKind::Fidelity, {{"dims", {3, 3}}, {"J", {1, 2, 3}}}), "J"));
  CHECK(starts_with(rejection(ExperimentKind::Fidelity, {{"dims", {3}}, {"source", {4}}}), "source"));
  CHECK(starts_with(rejection(ExperimentKind::Evolve, {{"dims", {3}}, {"statistics", "anyon"}}),
                    "statistics"));
  CHECK(starts_with(rejection(ExperimentKind::Evolve, {{"dims", {3}}, {"spinful", true}}), "spinful"));
  CHECK(starts_with(rejection(ExperimentKind::Sweep, {{"dims", {3}}, {"t_grid", {1.0, 0.5}}}),
                    "t_grid"));
  CHECK(starts_with(rejection(ExperimentKind::Fidelity, {{"dims", {3}}, {"format", "xml"}}), "format"));
  CHECK(starts_with(rejection(ExperimentKind::Fidelity, {{"experiment", "sweep"}, {"dims", {3}}}),
                    "experiment"));
  CHECK(starts_with(
      rejection(ExperimentKind::Evolve,
                {{"dims", {3}}, {"function", {{{"coefficient", {1, 0}}, {"powerz", json::array()}}}}}),
      "function[0].powerz"));
}

TEST_CASE("overrides and hashing") {
  json config{{"dims", {3, 3}}};
  apply_override(config, "J=2");
  apply_override(config, "format=json");
  CHECK(config["J"] == 2);
  CHECK(config["format"] == "json");
  CHECK_THROWS_AS(apply_override(config, "nonsense"), Error);
  CHECK_THROWS_AS(apply_override(config, "colour=red"), Error);

  const auto a = parse_config(ExperimentKind::Fidelity, config);
  CHECK(a.scales == std::vector<double>{2.0, 2.0});
  CHECK(a.format == OutputFormat::Json);
  config["out"] = "/tmp/elsewhere.json";
  CHECK(parse_config(ExperimentKind::Fidelity, config).hash == a.hash);
  config["J"] = 1;
  CHECK(parse_config(ExperimentKind::Fidelity, config).hash != a.hash);
}

TEST_CASE("experiments") {
  const auto couplings = run_experiment(parse_config(ExperimentKind::Couplings, {{"dims", {4}}}));
  CHECK(to_string(couplings, OutputFormat::Csv) ==
        "j,value\n1,0.8660254037844386\n2,1.0\n3,0.8660254037844386\n");

  const auto fidelity = run_experiment(parse_config(
      ExperimentKind::Fidelity,
      {{"dims", {3, 3}}, {"source", {1, 1}}, {"target", {3, 3}}, {"t", std::numbers::pi}}));
  CHECK(std::abs(std::get<double>(fidelity.scalars[1].second) - 1.0) < 1e-9);

  const json disorder{{"dims", {8}}, {"epsilon", 0.01}, {"trials", 5}, {"seed", 9}};
  const auto d1 = run_experiment(parse_config(ExperimentKind::Disorder, disorder));
  const auto d2 = run_experiment(parse_config(ExperimentKind::Disorder, disorder));
  CHECK(to_string(d1, OutputFormat::Json) == to_string(d2, OutputFormat::Json));
  CHECK(d1.series.rows.size() == 5);
}
