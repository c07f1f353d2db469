#include "gwmax/qz_group.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "gwmax/error.hpp"

namespace gwmax {

namespace {

mpq_class reduce_mod_one(mpq_class v) {
  v.canonicalize();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  v -= fl;
  return v;
}

// Rewrites a numerator row from denominator `from` to denominator `to`.
// Returns false if some coordinate is not representable over `to`.
bool rescale(std::span<const std::uint64_t> row, std::uint64_t from, std::uint64_t to,
             std::vector<std::uint64_t>& out) {
  out.resize(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    auto scaled = static_cast<unsigned __int128>(row[i]) * to;
    if (scaled % from != 0) return false;
    out[i] = static_cast<std::uint64_t>(scaled / from);
  }
  return true;
}

}  // namespace

Phase::Phase(const mpq_class& value) : value_(reduce_mod_one(value)) {}

Phase::Phase(long numerator, long denominator) {
  if (denominator == 0) throw Error(Errc::invalid_parameter, "zero denominator");
  value_ = reduce_mod_one(mpq_class(numerator, denominator));
}

Phase Phase::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0 || v.get_den() == 0)
    throw Error(Errc::parse_error, "not a rational number: '" + std::string(text) + "'");
  return Phase(v);
}

std::string Phase::str() const { return value_.get_str(); }

GroupElement GroupElement::zero(std::size_t dimension) {
  return GroupElement(std::vector<Phase>(dimension));
}

GroupElement GroupElement::parse(std::string_view text) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw Error(Errc::parse_error, "group element must be parenthesized");
  auto body = text.substr(open + 1, close - open - 1);
  std::vector<Phase> phases;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    phases.push_back(Phase::parse(body.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return GroupElement(std::move(phases));
}

bool GroupElement::is_identity() const {
  return std::all_of(phases_.begin(), phases_.end(), [](const Phase& p) { return p.is_zero(); });
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  if (other.dimension() != dimension())
    throw Error(Errc::invalid_dimension, "adding elements of different dimension");
  std::vector<Phase> out;
  out.reserve(dimension());
  for (std::size_t i = 0; i < dimension(); ++i)
    out.emplace_back(phases_[i].value() + other.phases_[i].value());
  return GroupElement(std::move(out));
}

GroupElement GroupElement::operator-() const { return scaled(-1); }

GroupElement GroupElement::scaled(const mpz_class& k) const {
  std::vector<Phase> out;
  out.reserve(dimension());
  for (const auto& p : phases_) out.emplace_back(p.value() * k);
  return GroupElement(std::move(out));
}

std::string GroupElement::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < phases_.size(); ++i) {
    if (i) s += ", ";
    s += phases_[i].str();
  }
  return s + ")";
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  return std::lexicographical_compare(a.phases_.begin(), a.phases_.end(), b.phases_.begin(),
                                      b.phases_.end());
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) { return os << g.str(); }

GroupElement canonicalize(std::span<const mpq_class> raw) {
  if (raw.empty()) throw Error(Errc::invalid_dimension, "group element of dimension 0");
  std::vector<Phase> phases;
  phases.reserve(raw.size());
  for (const auto& v : raw) {
    if (v.get_den() == 0) throw Error(Errc::invalid_parameter, "zero denominator");
    phases.emplace_back(v);
  }
  return GroupElement(std::move(phases));
}

mpz_class element_order(const GroupElement& g) {
  mpz_class ord = 1;
  for (const auto& p : g.phases()) {
    mpz_class den = p.denominator();
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), den.get_mpz_t());
  }
  return ord;
}

FiniteSubgroup::FiniteSubgroup(std::size_t dimension)
    : dimension_(dimension), rows_(dimension, 0), generators_(std::in_place) {
  if (dimension == 0) throw Error(Errc::invalid_dimension, "subgroup of dimension 0");
}

GroupElement FiniteSubgroup::element(std::size_t i) const {
  std::vector<Phase> phases;
  phases.reserve(dimension_);
  const mpz_class den(static_cast<unsigned long>(denominator_));
  for (auto v : row(i)) phases.emplace_back(mpq_class(mpz_class(static_cast<unsigned long>(v)), den));
  return GroupElement(std::move(phases));
}

std::vector<GroupElement> FiniteSubgroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) out.push_back(element(i));
  return out;
}

bool FiniteSubgroup::contains_row(std::span<const std::uint64_t> r) const {
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    auto m = row(mid);
    if (std::lexicographical_compare(m.begin(), m.end(), r.begin(), r.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < count_ && std::equal(r.begin(), r.end(), row(lo).begin());
}

bool FiniteSubgroup::contains(const GroupElement& g) const {
  if (g.dimension() != dimension_)
    throw Error(Errc::invalid_dimension, "membership test across dimensions");
  std::vector<std::uint64_t> r(dimension_);
  const mpz_class d(static_cast<unsigned long>(denominator_));
  for (std::size_t i = 0; i < dimension_; ++i) {
    const auto den = g[i].denominator();
    if (!mpz_divisible_p(d.get_mpz_t(), den.get_mpz_t())) return false;
    mpz_class v = g[i].numerator() * (d / den);
    r[i] = v.get_ui();
  }
  return contains_row(r);
}

void FiniteSubgroup::sort_rows() {
  std::vector<std::size_t> idx(count_);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
    auto ra = row(a), rb = row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  });
  std::vector<std::uint64_t> sorted;
  sorted.reserve(rows_.size());
  for (auto i : idx) {
    auto r = row(i);
    sorted.insert(sorted.end(), r.begin(), r.end());
  }
  rows_ = std::move(sorted);
}

bool operator==(const FiniteSubgroup& a, const FiniteSubgroup& b) {
  if (a.dimension_ != b.dimension_ || a.count_ != b.count_) return false;
  std::vector<std::uint64_t> scratch;
  for (std::size_t i = 0; i < a.count_; ++i) {
    if (!rescale(a.row(i), a.denominator_, b.denominator_, scratch)) return false;
    if (!b.contains_row(scratch)) return false;
  }
  return true;
}

FiniteSubgroup generate(std::size_t dimension, std::span<const GroupElement> gens,
                        const GroupLimits& limits) {
  FiniteSubgroup group(dimension);
  mpz_class exponent = 1;
  for (const auto& g : gens) {
    if (g.dimension() != dimension)
      throw Error(Errc::invalid_dimension, "generator " + g.str() + " has dimension " +
                                               std::to_string(g.dimension()) + ", expected " +
                                               std::to_string(dimension));
    mpz_class ord = element_order(g);
    mpz_lcm(exponent.get_mpz_t(), exponent.get_mpz_t(), ord.get_mpz_t());
  }
  // The exponent of a finite abelian group never exceeds its order.
  if (exponent > mpz_class(static_cast<unsigned long>(limits.max_elements)))
    throw Error(Errc::group_too_large,
                "group exponent " + exponent.get_str() + " exceeds the element cap of " +
                    std::to_string(limits.max_elements));
  const std::uint64_t d = exponent.get_ui();
  group.denominator_ = d;

  std::vector<std::uint64_t> step(dimension), x(dimension);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < dimension; ++i) {
      mpz_class v = g[i].numerator() * (exponent / g[i].denominator());
      step[i] = v.get_ui();
    }
    // Coset method: the new group is the union of H + k*g for k < r, where r
    // is the order of g modulo H.
    x = step;
    std::uint64_t r = 1;
    while (!group.contains_row(x)) {
      for (std::size_t i = 0; i < dimension; ++i) x[i] = (x[i] + step[i]) % d;
      ++r;
    }
    if (r == 1) continue;
    if (group.count_ > limits.max_elements / r)
      throw Error(Errc::group_too_large,
                  "closure exceeds the element cap of " + std::to_string(limits.max_elements));
    std::vector<std::uint64_t> grown;
    grown.reserve(group.rows_.size() * r);
    std::vector<std::uint64_t> shift(dimension, 0);
    for (std::uint64_t k = 0; k < r; ++k) {
      for (std::size_t e = 0; e < group.count_; ++e) {
        auto src = group.row(e);
        for (std::size_t i = 0; i < dimension; ++i) grown.push_back((src[i] + shift[i]) % d);
      }
      for (std::size_t i = 0; i < dimension; ++i) shift[i] = (shift[i] + step[i]) % d;
    }
    group.rows_ = std::move(grown);
    group.count_ *= r;
    group.sort_rows();
  }
  group.generators_.emplace(gens.begin(), gens.end());
  return group;
}

FiniteSubgroup intersect(const FiniteSubgroup& a, const FiniteSubgroup& b) {
  if (a.dimension_ != b.dimension_)
    throw Error(Errc::invalid_dimension, "intersecting subgroups of different dimension");
  const FiniteSubgroup& small = a.count_ <= b.count_ ? a : b;
  const FiniteSubgroup& large = a.count_ <= b.count_ ? b : a;
  const std::uint64_t d = std::gcd(a.denominator_, b.denominator_);

  FiniteSubgroup out(a.dimension_);
  out.denominator_ = d;
  out.rows_.clear();
  out.count_ = 0;
  std::vector<std::uint64_t> common, other;
  for (std::size_t i = 0; i < small.count_; ++i) {
    if (!rescale(small.row(i), small.denominator_, d, common)) continue;
    rescale(common, d, large.denominator_, other);
    if (!large.contains_row(other)) continue;
    out.rows_.insert(out.rows_.end(), common.begin(), common.end());
    ++out.count_;
  }
  out.generators_.reset();
  return out;
}

FiniteSubgroup intersect(const FiniteSubgroup& g, std::span<const std::vector<long>> b) {
  const std::size_t n = g.dimension_;
  for (const auto& r : b)
    if (r.size() != n) throw Error(Errc::invalid_dimension, "matrix width does not match the group");
  const auto den = static_cast<__int128>(g.denominator_);
  // One reduction per row is enough while n * max|b| * den fits in 64 bits.
  __int128 largest = 0;
  for (const auto& r : b)
    for (long v : r) largest = std::max(largest, static_cast<__int128>(v < 0 ? -static_cast<__int128>(v) : v));
  const bool narrow = largest * den * static_cast<__int128>(n) < (static_cast<__int128>(1) << 62);

  auto divides = [&](std::span<const std::uint64_t> x, const std::vector<long>& r) {
    if (narrow) {
      std::int64_t dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += r[j] * static_cast<std::int64_t>(x[j]);
      return dot % static_cast<std::int64_t>(g.denominator_) == 0;
    }
    __int128 dot = 0;
    for (std::size_t j = 0; j < n; ++j) dot = (dot + static_cast<__int128>(r[j]) * x[j]) % den;
    return dot == 0;
  };

  FiniteSubgroup out(n);
  out.denominator_ = g.denominator_;
  out.rows_.clear();
  out.count_ = 0;
  for (std::size_t i = 0; i < g.count_; ++i) {
    const auto x = g.row(i);
    bool keep = true;
    for (const auto& r : b)
      if (!divides(x, r)) {
        keep = false;
        break;
      }
    if (!keep) continue;
    out.rows_.insert(out.rows_.end(), x.begin(), x.end());
    ++out.count_;
  }
  out.generators_.reset();
  return out;
}

const std::vector<GroupElement>& FiniteSubgroup::generators() const {
  if (!generators_) generators_ = elements();
  return *generators_;
}

}  // namespace gwmax
