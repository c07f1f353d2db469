#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gwmax {

/// Dense row-major matrix over an exact ring (mpz_class or mpq_class).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<T> column(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const T& factor);
  void negate_row(std::size_t r);

  /// Submatrix made of the given rows, in the order given.
  Matrix select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination. Square only.
mpz_class determinant(const IntMatrix& a);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& a);

/// Exact inverse over Q, or nullopt when singular. Square only.
std::optional<RatMatrix> inverse(const IntMatrix& a);

/// Largest entry magnitude (‖A‖ for nonnegative matrices); 0 for empty.
mpz_class max_abs_entry(const IntMatrix& a);

/// Reads "m n" followed by m rows of n integers. Blank lines and lines
/// starting with '#' are skipped.
IntMatrix parse_matrix(std::string_view text);

/// Inverse of parse_matrix.
std::string format_matrix(const IntMatrix& a);

/// Bracketed single-line form, e.g. "[[3, 0], [0, 3], [2, 1]]".
std::string to_string(const IntMatrix& a);

std::ostream& operator<<(std::ostream& os, const IntMatrix& a);

}  // namespace gwmax
