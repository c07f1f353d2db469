#pragma once

// Polynomials, exponent matrices and quasihomogeneous weight systems.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gwmax/matrix.hpp"

namespace gwmax {

struct Monomial {
  mpq_class coefficient{1};
  std::vector<std::uint64_t> exponents;
};

struct Polynomial {
  std::vector<std::string> variables;
  std::vector<Monomial> monomials;

  std::size_t num_variables() const noexcept { return variables.size(); }
  std::size_t num_monomials() const noexcept { return monomials.size(); }
  std::string str() const;
};

/// Parses a sum of terms, e.g. "x^3 + y^3 + x^2*y" or "2*x1^4*x2 + x2^3".
///
/// Grammar:
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := [coeff '*'] factor ('*' factor)*
///   coeff  := integer ['/' integer]
///   factor := var ['^' integer]
///   var    := x | y | z | w | x<k> | x_<k>
///
/// Like terms are merged; terms whose coefficients cancel are dropped. Named
/// variables are ordered by first appearance, indexed ones by index.
Polynomial parse_polynomial(std::string_view source);

/// m x n nonnegative integer matrix of full column rank with m >= n.
class ExponentMatrix {
 public:
  /// Validates the invariants; throws not_admissible on m < n or rank < n and
  /// invalid_parameter on negative entries.
  explicit ExponentMatrix(IntMatrix matrix);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t rows() const noexcept { return matrix_.rows(); }
  std::size_t cols() const noexcept { return matrix_.cols(); }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }
  /// ‖A‖, the largest entry.
  mpz_class norm() const { return max_abs_entry(matrix_); }

 private:
  IntMatrix matrix_;
};

/// Rows follow monomial order; coefficients are discarded.
ExponentMatrix exponent_matrix(const Polynomial& p);

/// Exponent rows of p without any admissibility validation.
IntMatrix raw_exponent_matrix(const Polynomial& p);

/// Polynomial over x1..xn with unit coefficients whose exponent rows are `a`.
Polynomial polynomial_from_matrix(const IntMatrix& a);

struct WeightSystem {
  std::vector<mpq_class> q;

  std::size_t size() const noexcept { return q.size(); }
  /// True when some q_i > 1/2 (outside the a_i >= 2 convention).
  bool exceeds_half() const;
};

/// Solves A q = 1 exactly. Throws weights_not_unique (rank < n),
/// not_quasihomogeneous (inconsistent) or not_admissible (some q_i <= 0).
WeightSystem weights(const IntMatrix& a);
inline WeightSystem weights(const ExponentMatrix& a) { return weights(a.matrix()); }

/// Unique rational solution of A q = 1 with no sign condition, or nullopt when
/// the system is inconsistent or underdetermined.
std::optional<std::vector<mpq_class>> solve_unit_system(const IntMatrix& a);

enum class CheckStatus { pass, fail, not_checked };

const char* to_string(CheckStatus s) noexcept;

struct AdmissibilityReport {
  struct Check {
    CheckStatus status = CheckStatus::not_checked;
    std::string detail;
  };
  Check enough_monomials;   // (a) m >= n
  Check unique_weights;     // (b) unique positive weights
  Check no_cross_terms;     // (c) no x_i x_j
  Check nondegenerate;      // (d) always not_checked
  std::optional<WeightSystem> weights;
  std::vector<std::string> warnings;

  /// Conditions (a) through (c) all pass.
  bool passes() const;
  std::string str() const;
};

AdmissibilityReport check_admissible(const Polynomial& p);

/// All nonnegative integer vectors a with a . q = 1, in lexicographic order.
/// Throws too_many_monomials once more than max_count are found.
std::vector<std::vector<std::uint64_t>> enumerate_monomials(const WeightSystem& q,
                                                            std::size_t max_count = 100'000);

enum class AtomicKind { fermat, loop, chain };

const char* to_string(AtomicKind k) noexcept;

struct AtomicBlock {
  AtomicKind kind;
  /// Variable indices in block order: x_1 .. x_k of the atomic pattern.
  std::vector<std::size_t> variables;
  std::vector<std::uint64_t> exponents;

  friend bool operator==(const AtomicBlock&, const AtomicBlock&) = default;
};

struct AtomicDecomposition {
  std::vector<AtomicBlock> blocks;

  /// "Fermat(3) + Loop(2,2)"
  std::string str() const;
  friend bool operator==(const AtomicDecomposition&, const AtomicDecomposition&) = default;
};

/// Splits an invertible exponent matrix into Fermat, Loop and Chain blocks.
/// Blocks are ordered by their smallest variable; a loop starts at its
/// smallest variable and a chain at its head.
AtomicDecomposition classify_invertible(const IntMatrix& a);

/// Exponent rows of the decomposition, one per variable, blocks in order.
IntMatrix to_exponent_matrix(const AtomicDecomposition& d, std::size_t num_variables);

/// x1^(2n) + ... + xn^(2n) + x1^n x2^n + ... + xn^n x1^n for even n >= 4.
Polynomial build_wn(std::size_t n);

}  // namespace gwmax
