#include <cstdio>
#include <string>
#include <variant>

#include "pft/record.hpp"
#include "pft/verification.hpp"

namespace {

std::string show(const pft::Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(x);
        } else if constexpr (std::is_same_v<T, double>) {
          return pft::format_double(x);
        } else if constexpr (std::is_same_v<T, pft::Complex>) {
          return "(" + pft::format_double(x.real()) + ", " + pft::format_double(x.imag()) + ")";
        } else {
          return x;
        }
      },
      v);
}

}  // namespace

int main() {
  const pft::VerificationReport report = pft::run_verification();
  for (const auto& c : report.criteria) {
    std::printf("%s criterion %2d: %s (%.3f s", c.passed ? "PASS" : "FAIL", c.id, c.title.c_str(),
                c.seconds);
    if (c.time_limit) std::printf(", limit %.0f s", *c.time_limit);
    std::printf(")\n");
    for (const auto& [name, value] : c.measurements) {
      std::printf("      %s = %s\n", name.c_str(), show(value).c_str());
    }
  }
  std::printf("%s\n", report.all_passed() ? "ALL PASS" : "SOME CRITERIA FAILED");
  return report.all_passed() ? 0 : 1;
}
