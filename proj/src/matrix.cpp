#include "gwmax/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "gwmax/error.hpp"

namespace gwmax {

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw Error(Errc::invalid_dimension, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <typename T>
std::vector<T> Matrix<T>::column(std::size_t c) const {
  std::vector<T> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

template <typename T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

template <typename T>
void Matrix<T>::add_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

template <typename T>
void Matrix<T>::add_col_multiple(std::size_t dst, std::size_t src, const T& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

template <typename T>
void Matrix<T>::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

template <typename T>
Matrix<T> Matrix<T>::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    auto src = row(indices[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

template class Matrix<mpz_class>;
template class Matrix<mpq_class>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(Errc::invalid_dimension, "matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw Error(Errc::not_square, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) {
  RatMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      mpq_class f = -m(i, c) / m(r, c);
      m.add_row_multiple(i, r, f);
    }
    ++r;
  }
  return r;
}

std::optional<RatMatrix> inverse(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw Error(Errc::not_square, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix m(n, n);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    m.swap_rows(c, p);
    inv.swap_rows(c, p);
    mpq_class pivot = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      mpq_class f = -m(i, c);
      m.add_row_multiple(i, c, f);
      inv.add_row_multiple(i, c, f);
    }
  }
  return inv;
}

mpz_class max_abs_entry(const IntMatrix& a) {
  mpz_class best = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& v : a.row(i))
      if (abs(v) > best) best = abs(v);
  return best;
}

namespace {

std::vector<mpz_class> read_ints(const std::string& line, std::size_t lineno) {
  std::vector<mpz_class> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    mpz_class v;
    if (v.set_str(tok, 10) != 0)
      throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<IntMatrix> out;
  std::size_t filled = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto ints = read_ints(line, lineno);
    if (!out) {
      if (ints.size() != 2 || ints[0] < 0 || ints[1] < 0)
        throw ParseError(lineno, "header must be \"m n\"");
      if (!ints[0].fits_ulong_p() || !ints[1].fits_ulong_p() || ints[0] > 100000 ||
          ints[1] > 100000)
        throw ParseError(lineno, "matrix dimensions too large");
      out.emplace(ints[0].get_ui(), ints[1].get_ui());
      continue;
    }
    if (filled == out->rows()) throw ParseError(lineno, "more rows than declared");
    if (ints.size() != out->cols())
      throw ParseError(lineno, "expected " + std::to_string(out->cols()) +
                                   " entries, got " + std::to_string(ints.size()));
    std::move(ints.begin(), ints.end(), out->row(filled).begin());
    ++filled;
  }
  if (!out) throw ParseError(lineno, "missing \"m n\" header");
  if (filled != out->rows())
    throw ParseError(lineno, "expected " + std::to_string(out->rows()) + " rows, got " +
                                 std::to_string(filled));
  return *out;
}

std::string format_matrix(const IntMatrix& a) {
  std::ostringstream os;
  os << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
    os << '\n';
  }
  return os.str();
}

std::string to_string(const IntMatrix& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace gwmax
