#include "pft/experiments.hpp"

#include <chrono>
#include <cmath>
#include <set>

#include "pft/dressing.hpp"
#include "pft/error.hpp"
#include "pft/lattice_dynamics.hpp"
#include "pft/verification.hpp"

namespace pft {

using nlohmann::json;

namespace {

const std::set<std::string> kKnownFields{
    "experiment", "dims",  "J",        "statistics", "spinful", "function",
    "anchors",    "source", "target",  "t",          "t_grid",  "theta",
    "dressing",   "epsilon", "seed",   "trials",     "out",     "format",
    "record_timing"};

const std::set<std::string> kOutputOnlyFields{"out", "format", "record_timing"};

[[noreturn]] void invalid(const std::string& field, const std::string& message) {
  throw Error(ErrorKind::InvalidArgument, field + ": " + message);
}

double number(const json& v, const std::string& field) {
  if (!v.is_number()) invalid(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) invalid(field, "must be finite");
  return x;
}

int integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) invalid(field, "expected an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const std::string& field) {
  if (!v.is_array() || v.empty()) invalid(field, "expected a nonempty array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(integer(v[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Complex complex_pair(const json& v, const std::string& field) {
  if (v.is_number()) return {number(v, field), 0.0};
  if (!v.is_array() || v.size() != 2) invalid(field, "expected [re, im]");
  return {number(v[0], field + "[0]"), number(v[1], field + "[1]")};
}

SiteIndex site(const json& v, const std::string& field, const LatticeDims& dims) {
  SiteIndex s(int_list(v, field));
  try {
    validate_site(s, dims);
  } catch (const Error& e) {
    invalid(field, e.what());
  }
  return s;
}

Spin spin(const json& v, const std::string& field) {
  if (!v.is_string()) invalid(field, "expected \"up\", \"down\" or \"none\"");
  const auto s = v.get<std::string>();
  if (s == "up") return Spin::Up;
  if (s == "down") return Spin::Down;
  if (s == "none") return Spin::None;
  invalid(field, "unknown spin '" + s + "'");
}

PolynomialFunction polynomial(const json& v, const std::string& field) {
  if (!v.is_array() || v.empty()) invalid(field, "expected a nonempty list of monomials");
  PolynomialFunction f;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string item = field + "[" + std::to_string(i) + "]";
    const json& term = v[i];
    if (!term.is_object()) invalid(item, "expected {\"coefficient\": [re, im], \"powers\": [[var, power], ...]}");
    Monomial m;
    for (const auto& [key, value] : term.items()) {
      if (key == "coefficient") {
        m.coefficient = complex_pair(value, item + ".coefficient");
      } else if (key == "powers") {
        if (!value.is_array()) invalid(item + ".powers", "expected a list of [variable, power]");
        for (std::size_t k = 0; k < value.size(); ++k) {
          const std::string pf = item + ".powers[" + std::to_string(k) + "]";
          const auto pair = int_list(value[k], pf);
          if (pair.size() != 2 || pair[0] < 0 || pair[1] < 0) {
            invalid(pf, "expected [variable >= 0, power >= 0]");
          }
          m.factors.emplace_back(pair[0], pair[1]);
        }
      } else {
        invalid(item + "." + key, "unknown field");
      }
    }
    f.terms.push_back(std::move(m));
  }
  return f;
}

std::vector<double> time_grid(const json& v) {
  std::vector<double> grid;
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      grid.push_back(number(v[i], "t_grid[" + std::to_string(i) + "]"));
    }
  } else if (v.is_object()) {
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    for (const auto& [key, value] : v.items()) {
      if (key == "start") {
        start = number(value, "t_grid.start");
      } else if (key == "stop") {
        stop = number(value, "t_grid.stop");
      } else if (key == "count") {
        count = integer(value, "t_grid.count");
      } else {
        invalid("t_grid." + key, "unknown field");
      }
    }
    if (count < 1 || count > 1000000) invalid("t_grid.count", "must be in 1..1000000");
    if (count > 1 && !(stop > start)) invalid("t_grid.stop", "must exceed start");
    for (int k = 0; k < count; ++k) {
      grid.push_back(count == 1 ? start : start + (stop - start) * k / (count - 1));
    }
  } else {
    invalid("t_grid", "expected a list of times or {start, stop, count}");
  }
  if (grid.empty()) invalid("t_grid", "time grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) invalid("t_grid", "times must be strictly increasing");
  }
  return grid;
}

std::vector<double> scales_for(const ExperimentConfig& c) {
  if (!c.scales.empty()) return c.scales;
  return std::vector<double>(c.dims->rank(), 1.0);
}

double equal_scale(const ExperimentConfig& c) {
  const auto s = scales_for(c);
  for (double v : s) {
    if (v != s.front()) invalid("J", "this experiment needs the same J on every axis");
  }
  if (s.front() == 0.0) invalid("J", "must be nonzero");
  return s.front();
}

const LatticeDims& require_dims(const ExperimentConfig& c) {
  if (!c.dims) invalid("dims", "required for experiment '" + std::string(to_string(c.kind)) + "'");
  return *c.dims;
}

SiteIndex source_of(const ExperimentConfig& c) {
  return c.source.value_or(SiteIndex(std::vector<int>(c.dims->rank(), 1)));
}

double default_time(const ExperimentConfig& c) {
  if (c.t) return *c.t;
  return pst_time(equal_scale(c));
}

std::vector<ModeIndex> anchors_for(const ExperimentConfig& c) {
  if (!c.anchors.empty()) return c.anchors;
  const SiteIndex s = source_of(c);
  if (c.spinful) return {{s, Spin::Up}, {s, Spin::Down}};
  return {{s, Spin::None}};
}

void add_transfer(ResultRecord& r, const TransferReport& t) {
  r.add("fidelity", t.fidelity);
  r.add("rigid_fidelity", t.rigid_fidelity);
  r.add("per_particle_phase", t.per_particle_phase);
  r.add("rigidity_residual", t.rigidity_residual);
  r.series.columns = {"particles", "sector_phase"};
  for (const auto& [n, phase] : t.sector_phases) {
    r.series.rows.push_back({static_cast<std::int64_t>(n), phase});
  }
}

ResultRecord run_couplings(const ExperimentConfig& c) {
  const LatticeDims& dims = require_dims(c);
  const auto scales = scales_for(c);
  ResultRecord r;
  const bool single = dims.rank() == 1;
  r.series.columns = single ? std::vector<std::string>{"j", "value"}
                            : std::vector<std::string>{"axis", "j", "value"};
  for (std::size_t a = 0; a < dims.rank(); ++a) {
    const CouplingProfile p = coupling_profile(dims.extent(a), scales[a], a);
    for (std::size_t j = 0; j < p.values.size(); ++j) {
      std::vector<Value> row;
      if (!single) row.emplace_back(static_cast<std::int64_t>(a + 1));
      row.emplace_back(static_cast<std::int64_t>(j + 1));
      row.emplace_back(p.values[j]);
      r.series.rows.push_back(std::move(row));
    }
  }
  return r;
}

ResultRecord run_fidelity(const ExperimentConfig& c) {
  const LatticeDims& dims = require_dims(c);
  dims.require_transferable();
  const auto scales = scales_for(c);
  const SiteIndex source = source_of(c);
  const SiteIndex target = c.target.value_or(mirror_site(source, dims));
  const double t = default_time(c);
  const Complex amplitude = transfer_amplitude(dims, scales, source, target, t);
  ResultRecord r;
  r.add("t", t);
  r.add("fidelity", std::norm(amplitude));
  r.add("amplitude", amplitude);
  return r;
}

ResultRecord run_sweep(const ExperimentConfig& c) {
  const LatticeDims& dims = require_dims(c);
  dims.require_transferable();
  if (c.t_grid.empty()) invalid("t_grid", "required for experiment 'sweep'");
  const SiteIndex source = source_of(c);
  const SiteIndex target = c.target.value_or(mirror_site(source, dims));
  const auto points = fidelity_sweep(dims, scales_for(c), source, target, c.t_grid);
  ResultRecord r;
  r.series.columns = {"t", "fidelity"};
  double best = 0.0;
  for (const FidelityPoint& p : points) {
    r.series.rows.push_back({p.t, p.fidelity});
    best = std::max(best, p.fidelity);
  }
  r.add("max_fidelity", best);
  return r;
}

ResultRecord run_evolve(const ExperimentConfig& c) {
  const LatticeDims& dims = require_dims(c);
  dims.require_transferable();
  const FockModel model(dims, c.statistics, c.spinful);
  const PolynomialFunction f = c.function.value_or(PolynomialFunction::variable(0));
  const auto anchors = anchors_for(c);
  const double t = default_time(c);
  ResultRecord r;
  r.add("t", t);
  add_transfer(r, function_transfer_check(model, f, anchors, t, equal_scale(c)));
  return r;
}

ResultRecord run_disorder(const ExperimentConfig& c) {
  const LatticeDims& dims = require_dims(c);
  dims.require_transferable();
  if (!c.epsilon) invalid("epsilon", "required for experiment 'disorder'");
  if (*c.epsilon < 0.0) invalid("epsilon", "must be >= 0");
  if (c.trials < 1) invalid("trials", "must be >= 1");
  const auto scales = scales_for(c);
  const double t = default_time(c);
  const SiteIndex source = source_of(c);
  const SiteIndex target = c.target.value_or(mirror_site(source, dims));
  const auto s = static_cast<Eigen::Index>(flatten(source, dims));
  const auto g = static_cast<Eigen::Index>(flatten(target, dims));

  ResultRecord r;
  r.series.columns = {"trial", "fidelity"};
  double sum = 0.0;
  double lo = 1.0;
  double hi = 0.0;
  for (int trial = 0; trial < c.trials; ++trial) {
    std::vector<CouplingProfile> profiles;
    for (std::size_t a = 0; a < dims.rank(); ++a) {
      const std::uint64_t stream = c.seed * 0x9E3779B97F4A7C15ULL +
                                   static_cast<std::uint64_t>(trial) * dims.rank() + a;
      profiles.push_back(disorder_perturb(coupling_profile(dims.extent(a), scales[a], a), *c.epsilon, stream));
    }
    const DenseOperator u = propagator_numeric(lattice_hamiltonian(dims, profiles), t);
    const double fid = std::norm(u.matrix(g, s));
    r.series.rows.push_back({static_cast<std::int64_t>(trial), fid});
    sum += fid;
    lo = std::min(lo, fid);
    hi = std::max(hi, fid);
  }
  r.add("t", t);
  r.add("mean_fidelity", sum / c.trials);
  r.add("min_fidelity", lo);
  r.add("max_fidelity", hi);
  return r;
}

ResultRecord run_dressing(const ExperimentConfig& c) {
  const LatticeDims& dims = require_dims(c);
  dims.require_transferable();
  const FockModel model(dims, c.statistics, c.spinful);
  const PolynomialFunction f = c.function.value_or(PolynomialFunction::variable(0));
  const auto anchors = anchors_for(c);
  const double t = default_time(c);
  const double scale = equal_scale(c);
  DressingSpec spec;
  if (c.dressing == "lz") {
    spec = LzRotation{c.theta.value_or(0.0)};
  } else {
    spec = GenericDressing{random_unitary(static_cast<Eigen::Index>(model.mode_count()), c.seed)};
  }
  const DressedTransferReport d = dressed_transfer_check(model, spec, f, anchors, t, scale);
  const TransferReport bare = function_transfer_check(model, f, anchors, t, scale);
  ResultRecord r;
  r.add("t", t);
  add_transfer(r, d.transfer);
  r.add("undressed_fidelity", bare.fidelity);
  if (c.dressing == "lz") {
    r.add("source_dressing_phase", d.source_dressing_phase);
    r.add("target_dressing_phase", d.target_dressing_phase);
    r.add("quoted_phase", d.quoted_phase);
  }
  return r;
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Couplings: return "couplings";
    case ExperimentKind::Evolve: return "evolve";
    case ExperimentKind::Fidelity: return "fidelity";
    case ExperimentKind::Sweep: return "sweep";
    case ExperimentKind::Verify: return "verify";
    case ExperimentKind::Disorder: return "disorder";
    case ExperimentKind::Dressing: return "dressing";
  }
  return "unknown";
}

std::optional<ExperimentKind> parse_experiment_kind(std::string_view name) {
  for (auto k : {ExperimentKind::Couplings, ExperimentKind::Evolve, ExperimentKind::Fidelity,
                 ExperimentKind::Sweep, ExperimentKind::Verify, ExperimentKind::Disorder,
                 ExperimentKind::Dressing}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

void apply_override(json& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    invalid("--set", "expected key=value, got '" + assignment + "'");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  if (kKnownFields.count(key) == 0) invalid(key, "unknown field");
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  config[key] = std::move(value);
}

ExperimentConfig parse_config(ExperimentKind kind, const json& config) {
  if (!config.is_object()) invalid("config", "top level must be a JSON object");
  for (const auto& [key, value] : config.items()) {
    if (kKnownFields.count(key) == 0) invalid(key, "unknown field");
  }
  ExperimentConfig c;
  c.kind = kind;
  if (config.contains("experiment")) {
    const json& e = config["experiment"];
    if (!e.is_string() || e.get<std::string>() != to_string(kind)) {
      invalid("experiment", "does not match subcommand '" + std::string(to_string(kind)) + "'");
    }
  }
  if (config.contains("dims")) {
    try {
      c.dims = LatticeDims(int_list(config["dims"], "dims"));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidArgument) throw;
      invalid("dims", e.what());
    }
  }
  if (config.contains("J")) {
    const json& j = config["J"];
    if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) c.scales.push_back(number(j[i], "J[" + std::to_string(i) + "]"));
    } else {
      c.scales.push_back(number(j, "J"));
    }
  }
  if (config.contains("statistics")) {
    const json& s = config["statistics"];
    const std::string name = s.is_string() ? s.get<std::string>() : "";
    if (name == "boson") {
      c.statistics = Statistics::Boson;
    } else if (name == "fermion") {
      c.statistics = Statistics::Fermion;
    } else if (name == "hardcore") {
      c.statistics = Statistics::HardCore;
    } else {
      invalid("statistics", "expected \"boson\", \"fermion\" or \"hardcore\"");
    }
  }
  if (config.contains("spinful")) {
    if (!config["spinful"].is_boolean()) invalid("spinful", "expected true or false");
    c.spinful = config["spinful"].get<bool>();
  }
  if (config.contains("function")) c.function = polynomial(config["function"], "function");
  if (config.contains("t")) c.t = number(config["t"], "t");
  if (config.contains("t_grid")) c.t_grid = time_grid(config["t_grid"]);
  if (config.contains("theta")) c.theta = number(config["theta"], "theta");
  if (config.contains("epsilon")) c.epsilon = number(config["epsilon"], "epsilon");
  if (config.contains("seed")) {
    const json& s = config["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0)) {
      invalid("seed", "expected a nonnegative integer");
    }
    c.seed = s.get<std::uint64_t>();
  }
  if (config.contains("trials")) c.trials = integer(config["trials"], "trials");
  if (config.contains("dressing")) {
    const json& d = config["dressing"];
    if (!d.is_string() || (d.get<std::string>() != "lz" && d.get<std::string>() != "random")) {
      invalid("dressing", "expected \"lz\" or \"random\"");
    }
    c.dressing = d.get<std::string>();
  }
  if (config.contains("out")) {
    if (!config["out"].is_string()) invalid("out", "expected a path string");
    c.out = config["out"].get<std::string>();
  }
  if (config.contains("format")) {
    const json& f = config["format"];
    const std::string name = f.is_string() ? f.get<std::string>() : "";
    if (name == "csv") {
      c.format = OutputFormat::Csv;
    } else if (name == "json") {
      c.format = OutputFormat::Json;
    } else {
      invalid("format", "expected \"csv\" or \"json\"");
    }
  }
  if (config.contains("record_timing")) {
    if (!config["record_timing"].is_boolean()) invalid("record_timing", "expected true or false");
    c.record_timing = config["record_timing"].get<bool>();
  }

  // Fields that depend on the lattice.
  const bool needs_dims = kind != ExperimentKind::Verify;
  if (needs_dims && !c.dims) invalid("dims", "required for experiment '" + std::string(to_string(kind)) + "'");
  if (c.dims) {
    const LatticeDims& dims = *c.dims;
    if (!c.scales.empty() && c.scales.size() != 1 && c.scales.size() != dims.rank()) {
      invalid("J", "expected one value or one per axis (" + std::to_string(dims.rank()) + ")");
    }
    if (c.scales.size() == 1) c.scales.assign(dims.rank(), c.scales.front());
    if (config.contains("source")) c.source = site(config["source"], "source", dims);
    if (config.contains("target")) c.target = site(config["target"], "target", dims);
    if (config.contains("anchors")) {
      const json& a = config["anchors"];
      if (!a.is_array()) invalid("anchors", "expected a list of {\"site\": [...], \"spin\": ...}");
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string field = "anchors[" + std::to_string(i) + "]";
        if (!a[i].is_object()) invalid(field, "expected {\"site\": [...], \"spin\": ...}");
        ModeIndex m;
        bool has_site = false;
        for (const auto& [key, value] : a[i].items()) {
          if (key == "site") {
            m.site = site(value, field + ".site", dims);
            has_site = true;
          } else if (key == "spin") {
            m.spin = spin(value, field + ".spin");
          } else {
            invalid(field + "." + key, "unknown field");
          }
        }
        if (!has_site) invalid(field + ".site", "required");
        if (c.spinful != (m.spin != Spin::None)) {
          invalid(field + ".spin", c.spinful ? "spinful models need \"up\" or \"down\""
                                             : "spinless models take no spin");
        }
        c.anchors.push_back(std::move(m));
      }
    }
    if (c.spinful && c.statistics != Statistics::Fermion) {
      invalid("spinful", "spin flavor is only modeled for fermions");
    }
    if (c.function && static_cast<std::size_t>(c.function->variable_count()) >
                          (c.anchors.empty() ? (c.spinful ? 2u : 1u) : c.anchors.size())) {
      invalid("function", "uses more variables than there are anchors");
    }
  } else if (config.contains("source") || config.contains("target") || config.contains("anchors")) {
    invalid(config.contains("source") ? "source" : config.contains("target") ? "target" : "anchors",
            "needs dims");
  }

  json canonical = config;
  for (const auto& field : kOutputOnlyFields) canonical.erase(field);
  canonical["experiment"] = std::string(to_string(kind));
  c.hash = fnv1a_hex(canonical.dump());
  return c;
}

ResultRecord run_experiment(const ExperimentConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  ResultRecord r;
  switch (c.kind) {
    case ExperimentKind::Couplings: r = run_couplings(c); break;
    case ExperimentKind::Fidelity: r = run_fidelity(c); break;
    case ExperimentKind::Sweep: r = run_sweep(c); break;
    case ExperimentKind::Evolve: r = run_evolve(c); break;
    case ExperimentKind::Disorder: r = run_disorder(c); break;
    case ExperimentKind::Dressing: r = run_dressing(c); break;
    case ExperimentKind::Verify: r = verification_record(run_verification()); break;
  }
  r.experiment = std::string(to_string(c.kind));
  r.config_hash = c.hash;
  if (c.record_timing) {
    r.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

}  // namespace pft
