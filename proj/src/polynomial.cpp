#include "gwmax/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "gwmax/error.hpp"

namespace gwmax {

namespace {

constexpr std::uint64_t kMaxExponent = 1'000'000'000;

struct VariableRef {
  bool indexed = false;
  std::uint64_t index = 0;  // for indexed variables
  char name = 0;            // for named variables
  bool underscore = false;
  std::size_t position = 0;

  std::string spelling() const {
    if (!indexed) return std::string(1, name);
    return (underscore ? "x_" : "x") + std::to_string(index);
  }
  // Ordering key used only for the variable table.
  std::uint64_t key() const { return indexed ? index : static_cast<std::uint64_t>(name); }
};

struct ParsedTerm {
  mpq_class coefficient{1};
  std::vector<std::pair<VariableRef, std::uint64_t>> factors;
};

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view src) : src_(src) {}

  std::vector<ParsedTerm> parse_terms() {
    std::vector<ParsedTerm> terms;
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      first = false;
      ParsedTerm term = parse_term();
      if (sign < 0) term.coefficient = -term.coefficient;
      terms.push_back(std::move(term));
      skip_ws();
      if (at_end()) break;
    }
    return terms;
  }

  const std::vector<VariableRef>& seen() const { return seen_; }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  mpz_class parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected a number");
    return mpz_class(std::string(src_.substr(start, pos_ - start)), 10);
  }

  ParsedTerm parse_term() {
    ParsedTerm term;
    skip_ws();
    const std::size_t term_start = pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = parse_digits();
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        den = parse_digits();
        if (den == 0) throw ParseError(pos_, "zero denominator in coefficient");
      }
      term.coefficient = mpq_class(num, den);
      term.coefficient.canonicalize();
      skip_ws();
      if (peek() != '*') {
        if (at_end() || peek() == '+' || peek() == '-')
          throw ParseError(term_start, "constant terms are not allowed");
        throw ParseError(pos_, "expected '*' after coefficient");
      }
      ++pos_;
    }
    term.factors.push_back(parse_factor());
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      term.factors.push_back(parse_factor());
    }
    return term;
  }

  std::pair<VariableRef, std::uint64_t> parse_factor() {
    skip_ws();
    VariableRef var;
    var.position = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(pos_, "coefficient must come first in a term");
    if (c != 'x' && c != 'y' && c != 'z' && c != 'w')
      throw ParseError(pos_, at_end() ? "expected a variable" :
                                        std::string("unknown variable '") + c + "'");
    ++pos_;
    if (c == 'x' && (peek() == '_' || std::isdigit(static_cast<unsigned char>(peek())))) {
      var.indexed = true;
      if (peek() == '_') {
        var.underscore = true;
        ++pos_;
      }
      mpz_class idx = parse_digits();
      if (idx == 0 || !idx.fits_ulong_p() || idx > kMaxExponent)
        throw ParseError(var.position, "variable index must be a positive integer");
      var.index = idx.get_ui();
    } else {
      var.name = c;
    }
    if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
      throw ParseError(var.position, "unknown variable");
    record(var);

    std::uint64_t exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (peek() == '-') throw ParseError(pos_, "negative exponent");
      const std::size_t at = pos_;
      mpz_class e = parse_digits();
      if (e == 0) throw ParseError(at, "exponent must be positive");
      if (e > kMaxExponent) throw ParseError(at, "exponent too large");
      exponent = e.get_ui();
    }
    return {var, exponent};
  }

  void record(const VariableRef& var) {
    if (!seen_.empty() && seen_.front().indexed != var.indexed)
      throw ParseError(var.position, "cannot mix named (x, y, z, w) and indexed (x1, x2, ...) variables");
    for (const auto& s : seen_)
      if (s.key() == var.key()) return;
    seen_.push_back(var);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::vector<VariableRef> seen_;
};

}  // namespace

std::string Polynomial::str() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < monomials.size(); ++t) {
    const auto& mono = monomials[t];
    mpq_class c = mono.coefficient;
    if (t == 0) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool need_star = false;
    if (c != 1) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t j = 0; j < mono.exponents.size(); ++j) {
      if (mono.exponents[j] == 0) continue;
      if (need_star) os << '*';
      os << variables[j];
      if (mono.exponents[j] != 1) os << '^' << mono.exponents[j];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial parse_polynomial(std::string_view source) {
  PolynomialParser parser(source);
  auto terms = parser.parse_terms();

  std::vector<VariableRef> vars = parser.seen();
  if (vars.front().indexed)
    std::sort(vars.begin(), vars.end(),
              [](const VariableRef& a, const VariableRef& b) { return a.index < b.index; });
  std::map<std::uint64_t, std::size_t> column;
  Polynomial poly;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    column[vars[j].key()] = j;
    poly.variables.push_back(vars[j].spelling());
  }

  std::map<std::vector<std::uint64_t>, std::size_t> slot;
  std::vector<Monomial> merged;
  for (const auto& term : terms) {
    std::vector<std::uint64_t> exps(vars.size(), 0);
    for (const auto& [var, e] : term.factors) {
      auto& cell = exps[column.at(var.key())];
      cell += e;
      if (cell > kMaxExponent) throw ParseError(var.position, "exponent too large");
    }
    auto [it, fresh] = slot.emplace(exps, merged.size());
    if (fresh)
      merged.push_back({term.coefficient, std::move(exps)});
    else
      merged[it->second].coefficient += term.coefficient;
  }
  for (auto& mono : merged)
    if (mono.coefficient != 0) poly.monomials.push_back(std::move(mono));
  if (poly.monomials.empty())
    throw ParseError(source.size(), "polynomial is empty after combining like terms");

  for (std::size_t j = 0; j < vars.size(); ++j) {
    bool used = std::any_of(poly.monomials.begin(), poly.monomials.end(),
                            [j](const Monomial& m) { return m.exponents[j] > 0; });
    if (!used)
      throw ParseError(vars[j].position, "variable " + vars[j].spelling() +
                                             " appears only in terms with zero coefficient");
  }
  return poly;
}

ExponentMatrix::ExponentMatrix(IntMatrix matrix) : matrix_(std::move(matrix)) {
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (const auto& v : matrix_.row(i))
      if (v < 0) throw Error(Errc::invalid_parameter, "exponent matrix has a negative entry");
  if (matrix_.cols() == 0) throw Error(Errc::invalid_dimension, "exponent matrix has no columns");
  if (matrix_.rows() < matrix_.cols())
    throw Error(Errc::not_admissible, "fewer monomials (" + std::to_string(matrix_.rows()) +
                                          ") than variables (" +
                                          std::to_string(matrix_.cols()) + ")");
  if (rank(matrix_) < matrix_.cols())
    throw Error(Errc::not_admissible,
                "exponent matrix does not have full column rank; weights are not unique");
}

IntMatrix raw_exponent_matrix(const Polynomial& p) {
  IntMatrix a(p.num_monomials(), p.num_variables());
  for (std::size_t i = 0; i < p.num_monomials(); ++i)
    for (std::size_t j = 0; j < p.num_variables(); ++j)
      a(i, j) = static_cast<unsigned long>(p.monomials[i].exponents[j]);
  return a;
}

Polynomial polynomial_from_matrix(const IntMatrix& a) {
  Polynomial p;
  for (std::size_t j = 0; j < a.cols(); ++j) p.variables.push_back("x" + std::to_string(j + 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Monomial mono{1, {}};
    for (const auto& v : a.row(i)) {
      if (v < 0 || !v.fits_ulong_p())
        throw Error(Errc::invalid_parameter, "exponent entries must be nonnegative integers");
      mono.exponents.push_back(v.get_ui());
    }
    p.monomials.push_back(std::move(mono));
  }
  return p;
}

ExponentMatrix exponent_matrix(const Polynomial& p) {
  return ExponentMatrix(raw_exponent_matrix(p));
}

bool WeightSystem::exceeds_half() const {
  const mpq_class half(1, 2);
  return std::any_of(q.begin(), q.end(), [&](const mpq_class& v) { return v > half; });
}

namespace {

enum class SolveOutcome { unique, inconsistent, underdetermined };

SolveOutcome solve_ones(const IntMatrix& a, std::vector<mpq_class>& solution) {
  const std::size_t m = a.rows(), n = a.cols();
  RatMatrix aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = 1;
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && aug(p, c) == 0) ++p;
    if (p == m) continue;
    aug.swap_rows(r, p);
    mpq_class inv = 1 / aug(r, c);
    for (std::size_t j = 0; j <= n; ++j) aug(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i)
      if (i != r && aug(i, c) != 0) aug.add_row_multiple(i, r, mpq_class(-aug(i, c)));
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (aug(i, n) != 0) return SolveOutcome::inconsistent;
  if (r < n) return SolveOutcome::underdetermined;
  solution.assign(n, 0);
  for (std::size_t i = 0; i < r; ++i) solution[pivot_cols[i]] = aug(i, n);
  return SolveOutcome::unique;
}

}  // namespace

std::optional<std::vector<mpq_class>> solve_unit_system(const IntMatrix& a) {
  std::vector<mpq_class> q;
  if (solve_ones(a, q) != SolveOutcome::unique) return std::nullopt;
  return q;
}

WeightSystem weights(const IntMatrix& a) {
  if (a.cols() == 0) throw Error(Errc::invalid_dimension, "no variables");
  WeightSystem w;
  switch (solve_ones(a, w.q)) {
    case SolveOutcome::inconsistent:
      throw Error(Errc::not_quasihomogeneous, "A q = 1 has no solution");
    case SolveOutcome::underdetermined:
      throw Error(Errc::weights_not_unique, "A q = 1 has infinitely many solutions (rank " +
                                                std::to_string(rank(a)) + " < " +
                                                std::to_string(a.cols()) + ")");
    case SolveOutcome::unique:
      break;
  }
  for (std::size_t i = 0; i < w.q.size(); ++i)
    if (w.q[i] <= 0)
      throw Error(Errc::not_admissible, "weight q" + std::to_string(i + 1) + " = " +
                                            w.q[i].get_str() + " is not positive");
  return w;
}

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_checked: return "not checked";
  }
  return "?";
}

bool AdmissibilityReport::passes() const {
  return enough_monomials.status == CheckStatus::pass &&
         unique_weights.status == CheckStatus::pass &&
         no_cross_terms.status == CheckStatus::pass;
}

std::string AdmissibilityReport::str() const {
  std::ostringstream os;
  auto line = [&os](const char* label, const Check& c) {
    os << label << ": " << to_string(c.status);
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
  };
  line("(a) at least as many monomials as variables", enough_monomials);
  line("(b) unique positive weights", unique_weights);
  line("(c) no cross terms x_i*x_j", no_cross_terms);
  line("(d) nondegenerate", nondegenerate);
  for (const auto& w : warnings) os << "warning: " << w << '\n';
  return os.str();
}

AdmissibilityReport check_admissible(const Polynomial& p) {
  AdmissibilityReport report;
  const std::size_t m = p.num_monomials(), n = p.num_variables();
  report.enough_monomials = {m >= n ? CheckStatus::pass : CheckStatus::fail,
                             "m = " + std::to_string(m) + ", n = " + std::to_string(n)};

  const IntMatrix a = raw_exponent_matrix(p);
  try {
    WeightSystem w = weights(a);
    std::string shown = "q = (";
    for (std::size_t i = 0; i < w.q.size(); ++i) shown += (i ? ", " : "") + w.q[i].get_str();
    report.unique_weights = {CheckStatus::pass, shown + ")"};
    if (w.exceeds_half())
      report.warnings.push_back("some weight exceeds 1/2; outside the a_i >= 2 convention");
    report.weights = std::move(w);
  } catch (const Error& e) {
    report.unique_weights = {CheckStatus::fail, e.what()};
  }

  report.no_cross_terms = {CheckStatus::pass, ""};
  for (const auto& mono : p.monomials) {
    std::size_t ones = 0, others = 0;
    for (auto e : mono.exponents) {
      if (e == 1) ++ones;
      else if (e != 0) ++others;
    }
    if (ones == 2 && others == 0) {
      Polynomial single{p.variables, {Monomial{1, mono.exponents}}};
      report.no_cross_terms = {CheckStatus::fail, "cross term " + single.str()};
      break;
    }
  }
  report.nondegenerate = {CheckStatus::not_checked,
                          "isolated critical point at the origin is not verified"};
  return report;
}

std::vector<std::vector<std::uint64_t>> enumerate_monomials(const WeightSystem& q,
                                                            std::size_t max_count) {
  const std::size_t n = q.size();
  if (n == 0) throw Error(Errc::invalid_dimension, "empty weight system");
  mpz_class scale = 1;
  for (const auto& v : q.q) {
    if (v <= 0) throw Error(Errc::invalid_parameter, "weights must be positive");
    mpz_class den = v.get_den();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class scaled = q.q[i] * scale;
    w[i] = scaled.get_num();
    mpz_class bound = scale / w[i];
    if (bound > kMaxExponent)
      throw Error(Errc::invalid_parameter, "weight " + q.q[i].get_str() + " is too small");
  }

  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> current(n, 0);
  std::function<void(std::size_t, const mpz_class&)> recurse =
      [&](std::size_t i, const mpz_class& remaining) {
        if (i + 1 == n) {
          if (!mpz_divisible_p(remaining.get_mpz_t(), w[i].get_mpz_t())) return;
          current[i] = mpz_class(remaining / w[i]).get_ui();
          if (out.size() == max_count)
            throw Error(Errc::too_many_monomials,
                        "more than " + std::to_string(max_count) + " monomials (found " +
                            std::to_string(out.size() + 1) + " so far)");
          out.push_back(current);
          return;
        }
        const std::uint64_t top = mpz_class(remaining / w[i]).get_ui();
        for (std::uint64_t a = 0; a <= top; ++a) {
          current[i] = a;
          recurse(i + 1, remaining - w[i] * a);
        }
      };
  recurse(0, scale);
  return out;
}

const char* to_string(AtomicKind k) noexcept {
  switch (k) {
    case AtomicKind::fermat: return "Fermat";
    case AtomicKind::loop: return "Loop";
    case AtomicKind::chain: return "Chain";
  }
  return "?";
}

std::string AtomicDecomposition::str() const {
  std::string s;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) s += " + ";
    s += to_string(blocks[b].kind);
    s += '(';
    for (std::size_t i = 0; i < blocks[b].exponents.size(); ++i)
      s += (i ? "," : "") + std::to_string(blocks[b].exponents[i]);
    s += ')';
  }
  return s;
}

AtomicDecomposition classify_invertible(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() != n)
    throw Error(Errc::not_square, "noninvertible: " + std::to_string(a.rows()) +
                                      " monomials, " + std::to_string(n) + " variables");
  if (n == 0) throw Error(Errc::invalid_dimension, "no variables");

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> row_of(n, none);   // row whose main variable is v
  std::vector<std::size_t> next(n, none);     // variable v points to
  std::vector<std::uint64_t> exponent(n, 0);  // main exponent of v
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < n; ++j)
      if (a(r, j) != 0) nz.push_back(j);
    std::size_t main = none, pointer = none;
    if (nz.size() == 1) {
      main = nz[0];
    } else if (nz.size() == 2) {
      const bool first_one = a(r, nz[0]) == 1, second_one = a(r, nz[1]) == 1;
      if (first_one && second_one)
        throw Error(Errc::exponent_too_small, "row " + std::to_string(r + 1) + " is a cross term");
      if (first_one) {
        main = nz[1];
        pointer = nz[0];
      } else if (second_one) {
        main = nz[0];
        pointer = nz[1];
      } else {
        throw Error(Errc::not_decomposable,
                    "row " + std::to_string(r + 1) + " has no exponent equal to 1");
      }
    } else {
      throw Error(Errc::not_decomposable, "row " + std::to_string(r + 1) + " has " +
                                              std::to_string(nz.size()) + " nonzero entries");
    }
    if (a(r, main) < 2)
      throw Error(Errc::exponent_too_small,
                  "row " + std::to_string(r + 1) + " has leading exponent below 2");
    if (!a(r, main).fits_ulong_p())
      throw Error(Errc::invalid_parameter, "exponent too large");
    if (row_of[main] != none)
      throw Error(Errc::not_decomposable, "variable " + std::to_string(main + 1) +
                                              " leads more than one monomial");
    row_of[main] = r;
    next[main] = pointer;
    exponent[main] = a(r, main).get_ui();
  }

  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (next[v] != none && ++indegree[next[v]] > 1)
      throw Error(Errc::not_decomposable,
                  "variable " + std::to_string(next[v] + 1) + " is pointed to twice");

  AtomicDecomposition out;
  std::vector<bool> visited(n, false);
  auto walk = [&](std::size_t start, AtomicKind kind) {
    AtomicBlock block{kind, {}, {}};
    for (std::size_t v = start; v != none && !visited[v]; v = next[v]) {
      visited[v] = true;
      block.variables.push_back(v);
      block.exponents.push_back(exponent[v]);
    }
    out.blocks.push_back(std::move(block));
  };
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) walk(v, next[v] == none ? AtomicKind::fermat : AtomicKind::chain);
  for (std::size_t v = 0; v < n; ++v)
    if (!visited[v]) walk(v, AtomicKind::loop);

  std::sort(out.blocks.begin(), out.blocks.end(), [](const AtomicBlock& x, const AtomicBlock& y) {
    return *std::min_element(x.variables.begin(), x.variables.end()) <
           *std::min_element(y.variables.begin(), y.variables.end());
  });
  return out;
}

IntMatrix to_exponent_matrix(const AtomicDecomposition& d, std::size_t num_variables) {
  IntMatrix a(num_variables, num_variables);
  std::size_t r = 0;
  for (const auto& block : d.blocks) {
    const std::size_t len = block.variables.size();
    for (std::size_t k = 0; k < len; ++k, ++r) {
      if (r >= num_variables)
        throw Error(Errc::invalid_dimension, "decomposition has more rows than variables");
      a(r, block.variables[k]) = static_cast<unsigned long>(block.exponents[k]);
      const bool links = block.kind == AtomicKind::loop ||
                         (block.kind == AtomicKind::chain && k + 1 < len);
      if (links) a(r, block.variables[(k + 1) % len]) += 1;
    }
  }
  if (r != num_variables)
    throw Error(Errc::invalid_dimension, "decomposition does not cover every variable");
  return a;
}

Polynomial build_wn(std::size_t n) {
  if (n < 4 || n % 2 != 0)
    throw Error(Errc::invalid_parameter, "W_n needs an even n >= 4, got " + std::to_string(n));
  Polynomial p;
  for (std::size_t i = 0; i < n; ++i) p.variables.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m{1, std::vector<std::uint64_t>(n, 0)};
    m.exponents[i] = 2 * n;
    p.monomials.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m{1, std::vector<std::uint64_t>(n, 0)};
    m.exponents[i] = n;
    m.exponents[(i + 1) % n] = n;
    p.monomials.push_back(std::move(m));
  }
  return p;
}

}  // namespace gwmax
