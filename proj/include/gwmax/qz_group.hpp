#pragma once

// Exact arithmetic in (Q/Z)^n: canonical phases, subgroup closure and
// intersection.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gwmax {

/// A rational number reduced mod Z into [0, 1), in lowest terms.
class Phase {
 public:
  Phase() = default;
  explicit Phase(const mpq_class& value);
  Phase(long numerator, long denominator);

  /// Accepts "p/q" or "k" (any sign, any size); reduces mod 1.
  static Phase parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_zero() const { return value_ == 0; }

  /// "0", "1/3", ...
  std::string str() const;

  friend bool operator==(const Phase& a, const Phase& b) { return a.value_ == b.value_; }
  friend bool operator<(const Phase& a, const Phase& b) { return a.value_ < b.value_; }

 private:
  mpq_class value_{0};
};

/// Element g = (g_1, ..., g_n) of (Q/Z)^n held by its phases.
class GroupElement {
 public:
  GroupElement() = default;
  /// The identity of (Q/Z)^n.
  static GroupElement zero(std::size_t dimension);
  explicit GroupElement(std::vector<Phase> phases) : phases_(std::move(phases)) {}

  /// Parses the canonical textual form "(1/3, 1/3)".
  static GroupElement parse(std::string_view text);

  std::size_t dimension() const noexcept { return phases_.size(); }
  const Phase& operator[](std::size_t i) const { return phases_[i]; }
  const std::vector<Phase>& phases() const noexcept { return phases_; }
  bool is_identity() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement scaled(const mpz_class& k) const;

  /// "(1/3, 1/3)"
  std::string str() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.phases_ == b.phases_;
  }
  /// Lexicographic by phase value, first coordinate most significant.
  friend bool operator<(const GroupElement& a, const GroupElement& b);

 private:
  std::vector<Phase> phases_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

/// Reduces each coordinate into [0, 1). Throws invalid_dimension on empty input.
GroupElement canonicalize(std::span<const mpq_class> raw);

/// Smallest k > 0 with k*g = 0, i.e. the lcm of the phase denominators.
mpz_class element_order(const GroupElement& g);

struct GroupLimits {
  std::uint64_t max_elements = 1'000'000;
};

/// Finite subgroup of (Q/Z)^n with its full element set.
///
/// Elements are stored over a common denominator as integer numerator rows,
/// sorted lexicographically. That ordering coincides with the canonical
/// GroupElement ordering.
class FiniteSubgroup {
 public:
  /// The trivial group {0} in dimension n.
  explicit FiniteSubgroup(std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  /// For intersections this is the full element list, built on first use.
  const std::vector<GroupElement>& generators() const;
  std::uint64_t order() const noexcept { return count_; }

  /// The i-th element in canonical order.
  GroupElement element(std::size_t i) const;
  std::vector<GroupElement> elements() const;
  bool contains(const GroupElement& g) const;

  /// Common denominator of the stored elements (a multiple of the exponent).
  std::uint64_t denominator() const noexcept { return denominator_; }

  /// Equality of element sets.
  friend bool operator==(const FiniteSubgroup& a, const FiniteSubgroup& b);

 private:
  friend FiniteSubgroup generate(std::size_t, std::span<const GroupElement>,
                                 const GroupLimits&);
  friend FiniteSubgroup intersect(const FiniteSubgroup&, const FiniteSubgroup&);
  friend FiniteSubgroup intersect(const FiniteSubgroup&, std::span<const std::vector<long>>);

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {rows_.data() + i * dimension_, dimension_};
  }
  bool contains_row(std::span<const std::uint64_t> r) const;
  void sort_rows();

  std::size_t dimension_ = 0;
  std::uint64_t denominator_ = 1;
  std::uint64_t count_ = 1;
  std::vector<std::uint64_t> rows_;
  mutable std::optional<std::vector<GroupElement>> generators_;
};

/// Closure of `gens` under addition mod Z. Throws group_too_large once the
/// closure would exceed `limits.max_elements`.
FiniteSubgroup generate(std::size_t dimension, std::span<const GroupElement> gens,
                        const GroupLimits& limits = {});

/// Element-set intersection; the result's generators are its full element list.
FiniteSubgroup intersect(const FiniteSubgroup& a, const FiniteSubgroup& b);

/// g intersected with { x : B x in Z^k } for the k x n integer matrix B given
/// by its rows. For invertible B that group is generated by the columns of
/// B^-1, so it never has to be enumerated.
FiniteSubgroup intersect(const FiniteSubgroup& g, std::span<const std::vector<long>> b);

inline std::uint64_t order(const FiniteSubgroup& g) { return g.order(); }

}  // namespace gwmax
