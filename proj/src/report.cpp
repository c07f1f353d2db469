#include "gwmax/report.hpp"

#include <chrono>
#include <sstream>

#include "gwmax/error.hpp"

namespace gwmax {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

nlohmann::json int_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

mpz_class int_from_json(const nlohmann::json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>(), 10);
  if (j.is_number_unsigned()) return static_cast<unsigned long>(j.get<std::uint64_t>());
  if (j.is_number_integer()) return static_cast<long>(j.get<std::int64_t>());
  throw Error(Errc::parse_error, "expected an integer in report JSON");
}

nlohmann::json element_to_json(const GroupElement& g) {
  auto arr = nlohmann::json::array();
  for (const auto& p : g.phases()) arr.push_back(p.str());
  return arr;
}

GroupElement element_from_json(const nlohmann::json& j) {
  std::vector<Phase> phases;
  for (const auto& p : j) phases.push_back(Phase::parse(p.get<std::string>()));
  return GroupElement(std::move(phases));
}

}  // namespace

const char* to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::smith: return "smith";
    case Algorithm::submatrix: return "submatrix";
    case Algorithm::oracle: return "oracle";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "smith") return Algorithm::smith;
  if (name == "submatrix") return Algorithm::submatrix;
  if (name == "oracle") return Algorithm::oracle;
  throw Error(Errc::invalid_parameter, "unknown algorithm '" + std::string(name) + "'");
}

RunReport run_compute(const ExponentMatrix& a, std::string input, const ComputeOptions& options) {
  RunReport report;
  report.input = std::move(input);
  report.algorithm = options.algorithm;
  const auto start = Clock::now();
  switch (options.algorithm) {
    case Algorithm::smith: {
      GmaxResult r = gmax_smith(a, {options.enumerate, options.group});
      report.generators = std::move(r.generators);
      report.invariant_factors = std::move(r.invariant_factors);
      report.order = r.order;
      if (r.elements) report.elements = r.elements->elements();
      break;
    }
    case Algorithm::submatrix: {
      SubmatrixOptions sub{options.group, std::nullopt};
      if (options.timeout_seconds)
        sub.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(*options.timeout_seconds));
      GmaxResult r = gmax_submatrix(a, sub);
      report.generators = std::move(r.generators);
      report.order = r.order;
      report.elements = r.elements->elements();
      report.submatrices_visited = r.submatrix_stats->visited;
      report.early_exit = r.submatrix_stats->early_exit;
      break;
    }
    case Algorithm::oracle: {
      FiniteSubgroup g = brute_force_gmax(a, {options.oracle_cap, options.group});
      report.elements = g.elements();
      for (const auto& e : *report.elements)
        if (!e.is_identity()) report.generators.push_back(e);
      report.order = static_cast<unsigned long>(g.order());
      break;
    }
  }
  report.timing_ms = elapsed_ms(start);
  return report;
}

std::string format_text(const RunReport& report) {
  std::ostringstream os;
  os << "input: " << report.input << '\n';
  os << "algorithm: " << to_string(report.algorithm) << '\n';
  if (report.invariant_factors) {
    os << "invariant factors:";
    if (report.invariant_factors->empty()) os << " (none)";
    for (const auto& f : *report.invariant_factors) os << ' ' << f;
    os << '\n';
  }
  os << "order: " << report.order << '\n';
  os << "generators:";
  if (report.generators.empty()) os << " (none)";
  os << '\n';
  for (const auto& g : report.generators) os << "  " << g << '\n';
  if (report.elements) {
    os << "elements:\n";
    for (const auto& g : *report.elements) os << "  " << g << '\n';
  }
  if (report.submatrices_visited) os << "submatrices visited: " << *report.submatrices_visited << '\n';
  if (report.early_exit) os << "early exit: " << (*report.early_exit ? "yes" : "no") << '\n';
  os << "time: " << report.timing_ms << " ms\n";
  return os.str();
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json j;
  j["input"] = report.input;
  j["algorithm"] = to_string(report.algorithm);
  j["generators"] = nlohmann::json::array();
  for (const auto& g : report.generators) j["generators"].push_back(element_to_json(g));
  if (report.invariant_factors) {
    j["invariant_factors"] = nlohmann::json::array();
    for (const auto& f : *report.invariant_factors) j["invariant_factors"].push_back(int_to_json(f));
  }
  j["order"] = int_to_json(report.order);
  if (report.elements) {
    j["elements"] = nlohmann::json::array();
    for (const auto& g : *report.elements) j["elements"].push_back(element_to_json(g));
  }
  j["timing_ms"] = report.timing_ms;
  if (report.submatrices_visited) j["submatrices_visited"] = *report.submatrices_visited;
  if (report.early_exit) j["early_exit"] = *report.early_exit;
  return j;
}

RunReport report_from_json(const nlohmann::json& j) {
  try {
    RunReport r;
    r.input = j.value("input", "");
    r.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    for (const auto& g : j.at("generators")) r.generators.push_back(element_from_json(g));
    if (j.contains("invariant_factors")) {
      r.invariant_factors.emplace();
      for (const auto& f : j["invariant_factors"]) r.invariant_factors->push_back(int_from_json(f));
    }
    r.order = int_from_json(j.at("order"));
    if (j.contains("elements")) {
      r.elements.emplace();
      for (const auto& g : j["elements"]) r.elements->push_back(element_from_json(g));
    }
    r.timing_ms = j.value("timing_ms", 0.0);
    if (j.contains("submatrices_visited"))
      r.submatrices_visited = j["submatrices_visited"].get<std::uint64_t>();
    if (j.contains("early_exit")) r.early_exit = j["early_exit"].get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("malformed report JSON: ") + e.what());
  }
}

BenchRow bench_one(std::size_t n, const BenchOptions& options) {
  const ExponentMatrix a = exponent_matrix(build_wn(n));
  BenchRow row;
  row.n = n;
  row.m = a.rows();
  row.norm = a.norm();

  auto start = Clock::now();
  const GmaxResult smith = gmax_smith(a);
  row.t_smith_ms = elapsed_ms(start);
  row.group_order = smith.order;

  start = Clock::now();
  SubmatrixOptions sub{options.group, start + std::chrono::duration_cast<Clock::duration>(
                                                  std::chrono::duration<double>(options.timeout_seconds))};
  try {
    const GmaxResult r = gmax_submatrix(a, sub);
    row.t_submatrix_ms = elapsed_ms(start);
    row.submatrix_status = "ok";
    row.submatrices_visited = r.submatrix_stats->visited;
    row.early_exit = r.submatrix_stats->early_exit;
    if (r.order != smith.order)
      throw Error(Errc::invalid_parameter, "W_" + std::to_string(n) +
                                               ": submatrix and Smith orders disagree (" +
                                               r.order.get_str() + " vs " +
                                               smith.order.get_str() + ")");
  } catch (const Error& e) {
    if (e.code() == Errc::timeout)
      row.submatrix_status = "timeout";
    else if (e.code() == Errc::group_too_large)
      row.submatrix_status = "cap";
    else
      throw;
  }
  return row;
}

std::vector<BenchRow> run_bench(std::span<const std::size_t> ns, const BenchOptions& options) {
  if (ns.empty()) throw Error(Errc::invalid_parameter, "empty n list");
  for (auto n : ns)
    if (n < 4 || n % 2 != 0)
      throw Error(Errc::invalid_parameter, "bench needs even n >= 4, got " + std::to_string(n));
  std::vector<BenchRow> rows;
  for (auto n : ns) rows.push_back(bench_one(n, options));
  return rows;
}

std::string bench_csv_header() {
  return "n,m,norm_a,t_submatrix_ms,t_smith_ms,submatrices_visited,group_order";
}

std::string to_csv(const BenchRow& row) {
  std::ostringstream os;
  os << row.n << ',' << row.m << ',' << row.norm << ',';
  if (row.t_submatrix_ms)
    os << *row.t_submatrix_ms;
  else
    os << row.submatrix_status;
  os << ',' << row.t_smith_ms << ',';
  if (row.submatrices_visited) os << *row.submatrices_visited;
  os << ',' << row.group_order;
  return os.str();
}

}  // namespace gwmax
