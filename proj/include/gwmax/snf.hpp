#pragma once

#include <vector>

#include <gmpxx.h>

#include "gwmax/matrix.hpp"

namespace gwmax {

/// S = P A Q with P (m x m) and Q (n x n) unimodular and S diagonal in its
/// top n x n block, a_1 | a_2 | ... | a_n.
struct SmithDecomposition {
  IntMatrix S;
  IntMatrix P;
  IntMatrix Q;
  std::vector<mpz_class> invariant_factors;
};

/// Smith normal form of a full-column-rank integer matrix by classical
/// elimination. Pivot is the smallest nonzero magnitude in the remaining
/// block (ties to the lowest row, then column). Throws rank_deficient when
/// rank < n.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Independent check of every SmithDecomposition invariant against `a`.
bool verify(const IntMatrix& a, const SmithDecomposition& d);

}  // namespace gwmax
