#include "pft/record.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pft/error.hpp"

namespace pft {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0.0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_number(double x) {
  // JSON has no inf/nan.
  return std::isfinite(x) ? format_double(x) : "null";
}

std::string json_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(x);
        } else if constexpr (std::is_same_v<T, double>) {
          return json_number(x);
        } else if constexpr (std::is_same_v<T, Complex>) {
          return "[" + json_number(x.real()) + ", " + json_number(x.imag()) + "]";
        } else {
          return json_escape(x);
        }
      },
      v);
}

// Complex values take two CSV columns.
void csv_cells(const Value& v, std::vector<std::string>& cells) {
  std::visit(
      [&cells](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          cells.emplace_back(x ? "true" : "false");
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          cells.push_back(std::to_string(x));
        } else if constexpr (std::is_same_v<T, double>) {
          cells.push_back(format_double(x));
        } else if constexpr (std::is_same_v<T, Complex>) {
          cells.push_back(format_double(x.real()));
          cells.push_back(format_double(x.imag()));
        } else {
          cells.push_back(csv_field(x));
        }
      },
      v);
}

void csv_header(const std::string& name, const Value* sample, std::vector<std::string>& cells) {
  if (sample != nullptr && std::holds_alternative<Complex>(*sample)) {
    cells.push_back(csv_field(name + "_re"));
    cells.push_back(csv_field(name + "_im"));
  } else {
    cells.push_back(csv_field(name));
  }
}

void write_line(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << cells[i];
  }
  out << '\n';
}

}  // namespace

void write_csv(const ResultRecord& record, std::ostream& out) {
  std::vector<std::string> header;
  std::vector<std::string> scalar_cells;
  for (const auto& [name, v] : record.scalars) {
    csv_header(name, &v, header);
    csv_cells(v, scalar_cells);
  }
  if (record.series.columns.empty()) {
    write_line(header, out);
    if (!record.scalars.empty()) write_line(scalar_cells, out);
    return;
  }

  // Series columns first; scalars repeat on every row.
  std::vector<std::string> series_header;
  const auto& cols = record.series.columns;
  const auto* first = record.series.rows.empty() ? nullptr : &record.series.rows.front();
  for (std::size_t c = 0; c < cols.size(); ++c) {
    csv_header(cols[c], first != nullptr ? &(*first)[c] : nullptr, series_header);
  }
  series_header.insert(series_header.end(), header.begin(), header.end());
  write_line(series_header, out);
  for (const auto& row : record.series.rows) {
    std::vector<std::string> cells;
    for (const Value& v : row) csv_cells(v, cells);
    cells.insert(cells.end(), scalar_cells.begin(), scalar_cells.end());
    write_line(cells, out);
  }
}

void write_json(const ResultRecord& record, std::ostream& out) {
  out << "{\n";
  out << "  \"experiment\": " << json_escape(record.experiment) << ",\n";
  out << "  \"config_hash\": " << json_escape(record.config_hash) << ",\n";
  out << "  \"tool_version\": " << json_escape(record.tool_version) << ",\n";
  out << "  \"scalars\": {";
  for (std::size_t i = 0; i < record.scalars.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n") << "    " << json_escape(record.scalars[i].first) << ": "
        << json_value(record.scalars[i].second);
  }
  out << (record.scalars.empty() ? "}" : "\n  }");
  out << ",\n  \"series\": {\n    \"columns\": [";
  for (std::size_t i = 0; i < record.series.columns.size(); ++i) {
    out << (i == 0 ? "" : ", ") << json_escape(record.series.columns[i]);
  }
  out << "],\n    \"rows\": [";
  for (std::size_t r = 0; r < record.series.rows.size(); ++r) {
    out << (r == 0 ? "\n" : ",\n") << "      [";
    const auto& row = record.series.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) out << (c == 0 ? "" : ", ") << json_value(row[c]);
    out << "]";
  }
  out << (record.series.rows.empty() ? "]" : "\n    ]") << "\n  }";
  if (record.duration_seconds) {
    out << ",\n  \"duration_seconds\": " << json_number(*record.duration_seconds);
  }
  out << "\n}\n";
}

std::string to_string(const ResultRecord& record, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    write_csv(record, out);
  } else {
    write_json(record, out);
  }
  return out.str();
}

void emit(const ResultRecord& record, OutputFormat format, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorKind::InvalidArgument, "out: cannot open '" + path + "' for writing");
  }
  file << to_string(record, format);
  file.flush();
  if (!file) {
    throw Error(ErrorKind::InvalidArgument, "out: write to '" + path + "' failed");
  }
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pft
