#include "gwmax/snf.hpp"

#include "gwmax/error.hpp"

namespace gwmax {

namespace {

struct Pivot {
  std::size_t row, col;
};

// Smallest nonzero magnitude in S[t.., t..]; row-major scan keeps the first
// (lowest row, then column) among ties.
bool find_pivot(const IntMatrix& s, std::size_t t, Pivot& out) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      if (!found || mpz_cmpabs(s(i, j).get_mpz_t(), best.get_mpz_t()) < 0) {
        best = abs(s(i, j));
        out = {i, j};
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m < n)
    throw Error(Errc::rank_deficient, "matrix has fewer rows than columns; rank < n");
  SmithDecomposition d{a, IntMatrix::identity(m), IntMatrix::identity(n), {}};
  IntMatrix& s = d.S;

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      Pivot p{};
      if (!find_pivot(s, t, p))
        throw Error(Errc::rank_deficient,
                    "matrix has rank " + std::to_string(t) + " < " + std::to_string(n));
      s.swap_rows(t, p.row);
      d.P.swap_rows(t, p.row);
      s.swap_cols(t, p.col);
      d.Q.swap_cols(t, p.col);

      bool clear = true;
      mpz_class q;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        q = -q;
        s.add_row_multiple(i, t, q);
        d.P.add_row_multiple(i, t, q);
        if (s(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        q = -q;
        s.add_col_multiple(j, t, q);
        d.Q.add_col_multiple(j, t, q);
        if (s(t, j) != 0) clear = false;
      }
      if (!clear) continue;

      // Row and column t are clear; enforce a_t | every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            s.add_row_multiple(t, i, mpz_class(1));
            d.P.add_row_multiple(t, i, mpz_class(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      d.P.negate_row(t);
    }
  }

  d.invariant_factors.reserve(n);
  for (std::size_t t = 0; t < n; ++t) d.invariant_factors.push_back(s(t, t));
  return d;
}

bool verify(const IntMatrix& a, const SmithDecomposition& d) {
  const std::size_t m = a.rows(), n = a.cols();
  if (d.S.rows() != m || d.S.cols() != n) return false;
  if (d.P.rows() != m || d.P.cols() != m) return false;
  if (d.Q.rows() != n || d.Q.cols() != n) return false;
  if (d.invariant_factors.size() != n || m < n) return false;

  if (!(d.P * a * d.Q == d.S)) return false;
  if (abs(determinant(d.P)) != 1 || abs(determinant(d.Q)) != 1) return false;

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d.S(i, j) != 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class& f = d.invariant_factors[i];
    if (f < 1 || d.S(i, i) != f) return false;
    if (i > 0 && !mpz_divisible_p(f.get_mpz_t(), d.invariant_factors[i - 1].get_mpz_t()))
      return false;
  }
  return true;
}

}  // namespace gwmax
