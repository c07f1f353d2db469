#pragma once

// Run reports, JSON/CSV encodings and the W_n benchmark behind the CLI.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "gwmax/gmax.hpp"
#include "gwmax/polynomial.hpp"
#include "gwmax/qz_group.hpp"

namespace gwmax {

enum class Algorithm { smith, submatrix, oracle };

const char* to_string(Algorithm a) noexcept;
/// "smith", "submatrix" or "oracle"; throws invalid_parameter otherwise.
Algorithm parse_algorithm(std::string_view name);

struct ComputeOptions {
  Algorithm algorithm = Algorithm::smith;
  /// Enumerate the full group for the Smith algorithm (always done by the
  /// other two).
  bool enumerate = false;
  GroupLimits group;
  std::uint64_t oracle_cap = 1'000'000;
  std::optional<double> timeout_seconds;
};

struct RunReport {
  std::string input;
  Algorithm algorithm = Algorithm::smith;
  std::vector<GroupElement> generators;
  std::optional<std::vector<mpz_class>> invariant_factors;
  mpz_class order;
  std::optional<std::vector<GroupElement>> elements;
  double timing_ms = 0;
  std::optional<std::uint64_t> submatrices_visited;
  std::optional<bool> early_exit;
};

RunReport run_compute(const ExponentMatrix& a, std::string input, const ComputeOptions& options);

std::string format_text(const RunReport& report);

/// {"input", "algorithm", "generators": [["1/3","1/3"]], "invariant_factors",
///  "order", "elements"?, "timing_ms", "submatrices_visited"?, "early_exit"?}
/// Phases are strings; integers are JSON numbers when they fit in 64 bits,
/// decimal strings otherwise.
nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

struct BenchOptions {
  double timeout_seconds = 10.0;
  /// W_6 starts from a 12^6-element group, so the default is above the usual cap.
  GroupLimits group{4'000'000};
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  mpz_class norm;
  /// Set when the submatrix run finished.
  std::optional<double> t_submatrix_ms;
  /// "ok", "timeout" or "cap" (group cap exceeded).
  std::string submatrix_status;
  double t_smith_ms = 0;
  std::optional<std::uint64_t> submatrices_visited;
  bool early_exit = false;
  mpz_class group_order;
};

/// Runs both algorithms on W_n. Every n must be even and >= 4.
BenchRow bench_one(std::size_t n, const BenchOptions& options);
std::vector<BenchRow> run_bench(std::span<const std::size_t> ns, const BenchOptions& options);

std::string bench_csv_header();
std::string to_csv(const BenchRow& row);

}  // namespace gwmax
