#pragma once

// Maximal diagonal symmetry group G = { g in (Q/Z)^n : A g in Z^m }.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "gwmax/polynomial.hpp"
#include "gwmax/qz_group.hpp"

namespace gwmax {

struct SubmatrixStats {
  /// Row subsets examined, singular ones included.
  std::uint64_t visited = 0;
  std::uint64_t invertible = 0;
  bool early_exit = false;
  /// Order of the cyclic group generated by the weights; absent when A q = 1
  /// has no unique solution (the early-exit test is then disabled).
  std::optional<mpz_class> weight_order;
};

struct GmaxResult {
  std::vector<GroupElement> generators;
  /// Invariant factors a_i > 1; only set by the Smith algorithm.
  std::optional<std::vector<mpz_class>> invariant_factors;
  mpz_class order;
  std::optional<FiniteSubgroup> elements;
  std::optional<SubmatrixStats> submatrix_stats;
};

/// True iff every row of A dotted with g is an integer.
bool is_member(const IntMatrix& a, const GroupElement& g);
inline bool is_member(const ExponentMatrix& a, const GroupElement& g) {
  return is_member(a.matrix(), g);
}

struct OracleLimits {
  std::uint64_t max_candidates = 1'000'000;
  GroupLimits group;
};

/// Exhaustive oracle. Takes the first invertible n-row submatrix B (row
/// subsets in lexicographic order); every member has phases in (1/d)Z where
/// d is the lcm of the denominators of B^-1, so all d^n candidates are tested
/// against A directly. Throws oracle_too_large when d^n exceeds the cap.
FiniteSubgroup brute_force_gmax(const ExponentMatrix& a, const OracleLimits& limits = {});

struct SubmatrixOptions {
  GroupLimits group;
  /// Checked between submatrices; throws timeout once passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Intersection of <cols of B^-1> over all invertible n-row submatrices B,
/// with the early exit |H| = |<q>|. Returns the full element set.
GmaxResult gmax_submatrix(const ExponentMatrix& a, const SubmatrixOptions& options = {});

struct SmithOptions {
  bool enumerate = false;
  GroupLimits group;
};

/// Generators Q e_i / a_i (a_i != 1) from S = P A Q, order = prod a_i.
GmaxResult gmax_smith(const ExponentMatrix& a, const SmithOptions& options = {});

/// |<q>|: the lcm of the denominators of q mod Z.
mpz_class weight_group_order(const WeightSystem& q);

}  // namespace gwmax
