#include "gwmax/gmax.hpp"

#include <cassert>
#include <string>

#include "gwmax/error.hpp"
#include "gwmax/snf.hpp"

namespace gwmax {

namespace {

// Advances `idx` to the next n-subset of {0..m-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t n = idx.size();
  std::size_t i = n;
  while (i > 0) {
    --i;
    if (idx[i] < m - n + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return idx;
}

std::string describe_rows(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + std::to_string(idx[i] + 1);
  return s + "}";
}

std::vector<GroupElement> inverse_columns(const RatMatrix& inv) {
  std::vector<GroupElement> cols;
  cols.reserve(inv.cols());
  for (std::size_t c = 0; c < inv.cols(); ++c) cols.push_back(canonicalize(inv.column(c)));
  return cols;
}

}  // namespace

bool is_member(const IntMatrix& a, const GroupElement& g) {
  if (g.dimension() != a.cols())
    throw Error(Errc::invalid_dimension, "element has dimension " +
                                             std::to_string(g.dimension()) + ", matrix has " +
                                             std::to_string(a.cols()) + " columns");
  for (std::size_t r = 0; r < a.rows(); ++r) {
    mpq_class dot = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(r, j) != 0) dot += a(r, j) * g[j].value();
    if (dot.get_den() != 1) return false;
  }
  return true;
}

FiniteSubgroup brute_force_gmax(const ExponentMatrix& a, const OracleLimits& limits) {
  const std::size_t m = a.rows(), n = a.cols();
  std::optional<RatMatrix> inv;
  auto idx = first_combination(n);
  do {
    inv = inverse(a.matrix().select_rows(idx));
  } while (!inv && next_combination(idx, m));
  if (!inv) throw Error(Errc::rank_deficient, "no invertible submatrix");

  mpz_class d = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& v : inv->row(i)) {
      mpz_class den = v.get_den();
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
  mpz_class candidates;
  mpz_pow_ui(candidates.get_mpz_t(), d.get_mpz_t(), n);
  if (candidates > mpz_class(static_cast<unsigned long>(limits.max_candidates)))
    throw Error(Errc::oracle_too_large, "oracle would test " + candidates.get_str() +
                                            " candidates (cap " +
                                            std::to_string(limits.max_candidates) + ")");
  const std::uint64_t den = d.get_ui();

  std::vector<std::uint64_t> reduced(m * n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < n; ++j) reduced[r * n + j] = mpz_class(a(r, j) % d).get_ui();

  std::vector<GroupElement> members;
  std::vector<std::uint64_t> c(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < m && ok; ++r) {
      unsigned __int128 dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += static_cast<unsigned __int128>(reduced[r * n + j]) * c[j];
      ok = dot % den == 0;
    }
    if (ok) {
      std::vector<Phase> phases;
      for (auto v : c) phases.emplace_back(mpq_class(mpz_class(static_cast<unsigned long>(v)), d));
      members.emplace_back(std::move(phases));
    }
    std::size_t k = n;
    while (k > 0 && ++c[k - 1] == den) c[--k] = 0;
    if (k == 0) break;
  }
  FiniteSubgroup group = generate(n, members, limits.group);
  if (group.order() != members.size())
    throw Error(Errc::invalid_parameter, "oracle members are not closed under addition");
  return group;
}

GmaxResult gmax_submatrix(const ExponentMatrix& a, const SubmatrixOptions& options) {
  const std::size_t m = a.rows(), n = a.cols();
  if (!a.norm().fits_slong_p()) throw Error(Errc::invalid_parameter, "exponent entries too large");
  SubmatrixStats stats;
  if (auto q = solve_unit_system(a.matrix())) stats.weight_order = element_order(canonicalize(*q));

  std::optional<FiniteSubgroup> h;
  auto idx = first_combination(n);
  do {
    if (options.deadline && std::chrono::steady_clock::now() > *options.deadline)
      throw Error(Errc::timeout, "timed out after " + std::to_string(stats.visited) +
                                     " submatrices");
    ++stats.visited;
    auto inv = inverse(a.matrix().select_rows(idx));
    if (!inv) continue;
    ++stats.invertible;
    if (h) {
      // H cap G_i = { h in H : B h in Z^n }, so G_i itself is never built.
      std::vector<std::vector<long>> b;
      for (auto r : idx) {
        std::vector<long> row;
        for (const auto& v : a.matrix().row(r)) row.push_back(v.get_si());
        b.push_back(std::move(row));
      }
      h = intersect(*h, b);
    } else {
      try {
        h = generate(n, inverse_columns(*inv), options.group);
      } catch (const Error& e) {
        if (e.code() != Errc::group_too_large) throw;
        throw Error(Errc::group_too_large,
                    std::string(e.what()) + " for the submatrix of rows " + describe_rows(idx));
      }
    }
    if (stats.weight_order && mpz_class(static_cast<unsigned long>(h->order())) == *stats.weight_order) {
      stats.early_exit = true;
#ifndef NDEBUG
      auto q = solve_unit_system(a.matrix());
      assert(h->contains(canonicalize(*q)));
#endif
      break;
    }
  } while (next_combination(idx, m));
  if (!h) throw Error(Errc::rank_deficient, "no invertible submatrix");

  GmaxResult result;
  for (const auto& g : h->generators())
    if (!g.is_identity()) result.generators.push_back(g);
  result.order = static_cast<unsigned long>(h->order());
  result.elements = std::move(h);
  result.submatrix_stats = std::move(stats);
  return result;
}

GmaxResult gmax_smith(const ExponentMatrix& a, const SmithOptions& options) {
  const std::size_t n = a.cols();
  const SmithDecomposition snf = smith_normal_form(a.matrix());

  GmaxResult result;
  result.order = 1;
  result.invariant_factors.emplace();
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class& ai = snf.invariant_factors[i];
    result.order *= ai;
    if (ai == 1) continue;
    result.invariant_factors->push_back(ai);
    std::vector<mpq_class> column;
    column.reserve(n);
    for (const auto& v : snf.Q.column(i)) column.emplace_back(v, ai);
    GroupElement g = canonicalize(column);
    if (!g.is_identity()) result.generators.push_back(std::move(g));
  }
  if (options.enumerate) result.elements = generate(n, result.generators, options.group);
  return result;
}

mpz_class weight_group_order(const WeightSystem& q) {
  return element_order(canonicalize(q.q));
}

}  // namespace gwmax
