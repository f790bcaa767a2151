#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pft/core_algebra.hpp"

namespace pft {

inline constexpr const char* kToolVersion = "pft 1.0.0";

using Value = std::variant<bool, std::int64_t, double, Complex, std::string>;

struct Series {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

/// Outcome of one experiment. Deterministic for a given configuration;
/// wall-clock time is only present when explicitly requested.
struct ResultRecord {
  std::string experiment;
  std::string config_hash;
  std::string tool_version = kToolVersion;
  std::vector<std::pair<std::string, Value>> scalars;
  Series series;
  std::optional<double> duration_seconds;

  void add(std::string name, Value v) { scalars.emplace_back(std::move(name), std::move(v)); }
};

enum class OutputFormat { Csv, Json };

/// 17 significant digits, always with a decimal point or exponent.
std::string format_double(double x);

void write_csv(const ResultRecord& record, std::ostream& out);
void write_json(const ResultRecord& record, std::ostream& out);
std::string to_string(const ResultRecord& record, OutputFormat format);

/// Writes to path; throws Error(InvalidArgument) on I/O failure.
void emit(const ResultRecord& record, OutputFormat format, const std::string& path);

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace pft
