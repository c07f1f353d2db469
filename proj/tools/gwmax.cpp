// gwmax: maximal diagonal symmetry groups of quasihomogeneous polynomials.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gwmax/error.hpp"
#include "gwmax/gmax.hpp"
#include "gwmax/polynomial.hpp"
#include "gwmax/report.hpp"
#include "gwmax/snf.hpp"

using namespace gwmax;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_parameter, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* cap_flag(Errc code) {
  switch (code) {
    case Errc::group_too_large: return "--cap-group";
    case Errc::oracle_too_large: return "--cap-oracle";
    case Errc::too_many_monomials: return "--cap-monomials";
    case Errc::timeout: return "--timeout";
    default: return nullptr;
  }
}

struct InputArgs {
  std::string polynomial;
  std::string matrix_file;
};

void add_input(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("polynomial", in.polynomial, "Polynomial, e.g. \"x^3+y^3+x^2*y\"");
  cmd->add_option("--matrix", in.matrix_file, "Exponent matrix file (\"m n\" then m rows)");
}

// Loads the input as a polynomial (matrix files get unit coefficients).
Polynomial load_polynomial(const InputArgs& in, std::string& descriptor) {
  if (!in.polynomial.empty() && !in.matrix_file.empty())
    throw Error(Errc::invalid_parameter, "give either a polynomial or --matrix, not both");
  if (!in.matrix_file.empty()) {
    descriptor = in.matrix_file;
    return polynomial_from_matrix(parse_matrix(read_file(in.matrix_file)));
  }
  if (in.polynomial.empty()) throw Error(Errc::invalid_parameter, "no input polynomial or --matrix");
  descriptor = in.polynomial;
  return parse_polynomial(in.polynomial);
}

mpq_class parse_rational(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0 || v.get_den() == 0)
    throw Error(Errc::parse_error, "not a rational number: '" + text + "'");
  v.canonicalize();
  return v;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal diagonal symmetry groups of quasihomogeneous polynomials"};
  app.require_subcommand(1);

  // compute
  InputArgs compute_in;
  std::string algorithm = "smith";
  bool json = false, force = false;
  ComputeOptions compute_opts;
  double compute_timeout = 0;
  auto* compute = app.add_subcommand("compute", "Compute the maximal symmetry group");
  add_input(compute, compute_in);
  compute->add_option("--algorithm", algorithm, "smith | submatrix | oracle")
      ->check(CLI::IsMember({"smith", "submatrix", "oracle"}));
  compute->add_flag("--json", json, "Emit a JSON report");
  compute->add_flag("--enumerate", compute_opts.enumerate, "List every group element");
  compute->add_flag("--force", force, "Skip the admissibility gate");
  compute->add_option("--timeout", compute_timeout, "Seconds allowed for the submatrix algorithm");
  compute->add_option("--cap-group", compute_opts.group.max_elements, "Largest group to enumerate");
  compute->add_option("--cap-oracle", compute_opts.oracle_cap, "Largest oracle candidate count");

  // snf
  std::string snf_file;
  bool snf_verify = false;
  auto* snf = app.add_subcommand("snf", "Smith normal form S = P A Q of a matrix file");
  snf->add_option("file", snf_file, "Matrix file")->required();
  snf->add_flag("--verify", snf_verify, "Check S = PAQ, unimodularity and divisibility");

  // bench
  std::vector<std::size_t> bench_ns{4, 6, 8, 10, 12};
  BenchOptions bench_opts;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Time both algorithms on the W_n family");
  bench->add_option("--n", bench_ns, "Even n >= 4")->delimiter(',');
  bench->add_option("--timeout", bench_opts.timeout_seconds, "Seconds per submatrix run");
  bench->add_option("--cap-group", bench_opts.group.max_elements, "Largest group to enumerate");
  bench->add_option("--output", bench_out, "Write CSV here instead of stdout");

  // monomials
  std::vector<std::string> weight_text;
  std::size_t monomial_cap = 100'000;
  auto* monomials = app.add_subcommand("monomials", "List every monomial allowed by a weight system");
  monomials->add_option("weights", weight_text, "Weights, e.g. 1/3 1/3")->required()->delimiter(',');
  monomials->add_option("--cap-monomials", monomial_cap, "Largest monomial count");

  // classify
  InputArgs classify_in;
  auto* classify = app.add_subcommand("classify", "Atomic-type decomposition of an invertible polynomial");
  add_input(classify, classify_in);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      std::string descriptor;
      const Polynomial p = load_polynomial(compute_in, descriptor);
      const AdmissibilityReport adm = check_admissible(p);
      if (!adm.passes() && !force) {
        std::cerr << "error: input is not admissible\n" << adm.str();
        return 1;
      }
      for (const auto& w : adm.warnings) std::cerr << "warning: " << w << '\n';
      compute_opts.algorithm = parse_algorithm(algorithm);
      if (compute_timeout > 0) compute_opts.timeout_seconds = compute_timeout;
      const RunReport report = run_compute(exponent_matrix(p), descriptor, compute_opts);
      if (json)
        std::cout << to_json(report).dump(2) << '\n';
      else
        std::cout << format_text(report);
      return 0;
    }

    if (*snf) {
      const IntMatrix a = parse_matrix(read_file(snf_file));
      const SmithDecomposition d = smith_normal_form(a);
      std::cout << "S =\n" << format_matrix(d.S) << "P =\n" << format_matrix(d.P) << "Q =\n"
                << format_matrix(d.Q) << "invariant factors:";
      for (const auto& f : d.invariant_factors) std::cout << ' ' << f;
      std::cout << '\n';
      if (snf_verify) {
        const bool ok = verify(a, d);
        std::cout << "verify: " << (ok ? "pass" : "FAIL") << '\n';
        return ok ? 0 : 1;
      }
      return 0;
    }

    if (*bench) {
      const auto rows = run_bench(bench_ns, bench_opts);
      std::ofstream file;
      if (!bench_out.empty()) {
        file.open(bench_out);
        if (!file) throw Error(Errc::invalid_parameter, "cannot write " + bench_out);
      }
      std::ostream& out = bench_out.empty() ? std::cout : file;
      out << bench_csv_header() << '\n';
      for (const auto& row : rows) out << to_csv(row) << '\n';
      return 0;
    }

    if (*monomials) {
      WeightSystem q;
      for (const auto& t : weight_text) q.q.push_back(parse_rational(t));
      const auto vectors = enumerate_monomials(q, monomial_cap);
      for (const auto& v : vectors) {
        std::cout << '(';
        for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i];
        std::cout << ")\n";
      }
      std::cout << "count: " << vectors.size() << '\n';
      // Homogeneous weights 1/a admit exactly C(a+n-1, a) monomials.
      const mpq_class& first = q.q.front();
      bool homogeneous = first.get_num() == 1;
      for (const auto& v : q.q) homogeneous = homogeneous && v == first;
      if (homogeneous) {
        const unsigned long a = first.get_den().get_ui(), n = q.q.size();
        const mpz_class expected = binomial(a + n - 1, a);
        std::cout << "formula C(" << a + n - 1 << ", " << a << ") = " << expected
                  << (expected == vectors.size() ? " (matches)" : " (MISMATCH)") << '\n';
      }
      return 0;
    }

    if (*classify) {
      std::string descriptor;
      const Polynomial p = load_polynomial(classify_in, descriptor);
      const AtomicDecomposition d = classify_invertible(raw_exponent_matrix(p));
      std::cout << d.str() << '\n';
      for (const auto& block : d.blocks) {
        std::cout << "  " << to_string(block.kind) << ":";
        for (std::size_t i = 0; i < block.variables.size(); ++i)
          std::cout << ' ' << p.variables[block.variables[i]] << '^' << block.exponents[i];
        std::cout << '\n';
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what();
    if (const char* flag = cap_flag(e.code())) std::cerr << " (raise " << flag << ")";
    std::cerr << '\n';
    return 1;
  }
  return 0;
}
