#pragma once

// Test-only oracles. Nothing here calls into the code under test except for
// building inputs, so the expected values stay independent of it.

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "gwmax/error.hpp"
#include "gwmax/matrix.hpp"
#include "gwmax/qz_group.hpp"

namespace gwmax::testing {

using SmallMatrix = std::vector<std::vector<long long>>;

inline SmallMatrix to_small(const IntMatrix& a) {
  SmallMatrix out(a.rows(), std::vector<long long>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j).get_si();
  return out;
}

inline IntMatrix from_small(const SmallMatrix& s) {
  IntMatrix a(s.size(), s.empty() ? 0 : s[0].size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = static_cast<long>(s[i][j]);
  return a;
}

/// Cofactor expansion along the first row.
inline long long laplace_det(const SmallMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    SmallMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * m[0][c] * laplace_det(minor);
  }
  return det;
}

inline void for_each_subset(std::size_t total, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == k) {
      fn(pick);
      return;
    }
    for (std::size_t i = start; i < total; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

/// gcd of all k x k minors of m.
inline long long minor_gcd(const SmallMatrix& m, std::size_t k) {
  long long g = 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  for_each_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
      SmallMatrix sub(k, std::vector<long long>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
      g = std::gcd(g, std::llabs(laplace_det(sub)));
    });
  });
  return g;
}

using RawElement = std::vector<mpq_class>;

inline RawElement reduce(RawElement v) {
  for (auto& x : v) {
    x.canonicalize();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    x -= fl;
  }
  return v;
}

/// Breadth-first closure with a std::set.
inline std::set<RawElement> naive_closure(std::size_t n, const std::vector<RawElement>& gens) {
  std::set<RawElement> seen{RawElement(n, 0)};
  std::vector<RawElement> frontier{RawElement(n, 0)};
  while (!frontier.empty()) {
    std::vector<RawElement> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        RawElement s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = e[i] + g[i];
        s = reduce(std::move(s));
        if (seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Exhaustive G = { g : A g in Z^m } over phases with denominator `den`.
inline std::set<RawElement> grid_members(const SmallMatrix& a, long long den) {
  const std::size_t n = a[0].size();
  std::set<RawElement> out;
  std::vector<long long> c(n, 0);
  while (true) {
    bool ok = true;
    for (const auto& row : a) {
      long long dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += row[j] * c[j];
      if (dot % den != 0) ok = false;
    }
    if (ok) {
      RawElement e;
      for (auto v : c) e.push_back(mpq_class(static_cast<long>(v), static_cast<long>(den)));
      out.insert(reduce(e));
    }
    std::size_t k = n;
    while (k > 0 && ++c[k - 1] == den) c[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

inline RawElement raw(const GroupElement& g) {
  RawElement out;
  for (const auto& p : g.phases()) out.push_back(p.value());
  return out;
}

inline std::set<RawElement> raw_set(const FiniteSubgroup& g) {
  std::set<RawElement> out;
  for (const auto& e : g.elements()) out.insert(raw(e));
  return out;
}

inline GroupElement elem(std::initializer_list<std::pair<long, long>> phases) {
  std::vector<Phase> out;
  for (auto [num, den] : phases) out.emplace_back(num, den);
  return GroupElement(std::move(out));
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, long max_entry) {
  std::uniform_int_distribution<long> dist(0, max_entry);
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
  return a;
}

/// Error code thrown by fn, or nullopt if it returned normally.
template <class Fn>
std::optional<Errc> error_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace gwmax::testing
