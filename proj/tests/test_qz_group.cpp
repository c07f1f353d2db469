#include <doctest.h>

#include <random>

#include "gwmax/error.hpp"
#include "gwmax/qz_group.hpp"
#include "test_support.hpp"

using namespace gwmax;
using gwmax::testing::elem;

namespace {

std::vector<GroupElement> parse_all(std::initializer_list<const char*> texts) {
  std::vector<GroupElement> out;
  for (const char* t : texts) out.push_back(GroupElement::parse(t));
  return out;
}

// The three 2-row submatrix groups of x^3 + y^3 + x^2 y.
const auto kG1 = parse_all({"(0,0)", "(1/3, 0)", "(2/3, 0)", "(0,1/3)", "(1/3,1/3)",
                            "(2/3,1/3)", "(0,2/3)", "(1/3,2/3)", "(2/3,2/3)"});
const auto kG2 = parse_all({"(0,0)", "(1/3,1/3)", "(2/3,2/3)"});
const auto kG3 = parse_all({"(0,0)", "(1/2,0)", "(5/6,1/3)", "(1/3,1/3)", "(2/3,2/3)", "(1/6, 2/3)"});

bool same_set(const FiniteSubgroup& g, std::vector<GroupElement> expected) {
  std::sort(expected.begin(), expected.end());
  return g.elements() == expected;
}

}  // namespace

TEST_CASE("canonicalize reduces into [0,1)") {
  std::vector<mpq_class> v{mpq_class(1, 3), mpq_class(-2, 3)};
  CHECK(canonicalize(v).str() == "(1/3, 1/3)");
  v = {0, 0};
  CHECK(canonicalize(v).str() == "(0, 0)");
  v = {mpq_class(7, 3), mpq_class(-1, 6)};
  CHECK(canonicalize(v) == elem({{1, 3}, {5, 6}}));
  v = {mpq_class(6, 4), 5};
  CHECK(canonicalize(v).str() == "(1/2, 0)");

  std::vector<mpq_class> empty;
  CHECK_THROWS_AS(canonicalize(empty), Error);
  try {
    canonicalize(empty);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_dimension);
  }
}

TEST_CASE("canonical text form round-trips through parse") {
  auto g = GroupElement::parse("( 5/6 ,1/3)");
  CHECK(g.str() == "(5/6, 1/3)");
  CHECK(GroupElement::parse(g.str()) == g);
  CHECK(GroupElement::parse("(-1/3, 4)").str() == "(2/3, 0)");
  CHECK_THROWS_AS(GroupElement::parse("1/3, 1/3"), Error);
  CHECK_THROWS_AS(GroupElement::parse("(1/0)"), Error);
  CHECK_THROWS_AS(GroupElement::parse("(a)"), Error);
}

TEST_CASE("generate reproduces the submatrix groups of x^3 + y^3 + x^2 y") {
  auto g1 = generate(2, parse_all({"(1/3,0)", "(0,1/3)"}));
  CHECK(g1.order() == 9);
  CHECK(same_set(g1, kG1));

  auto g2 = generate(2, parse_all({"(1/3,1/3)"}));
  CHECK(g2.order() == 3);
  CHECK(same_set(g2, kG2));

  // Columns of the inverse of [[0,3],[2,1]]: (-1/6, 1/3) and (1/2, 0).
  auto g3 = generate(2, parse_all({"(-1/6,1/3)", "(1/2,0)"}));
  CHECK(order(g3) == 6);
  CHECK(same_set(g3, kG3));
}

TEST_CASE("generate edge cases") {
  auto trivial = generate(3, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.elements() == std::vector{GroupElement::zero(3)});

  auto klein = generate(2, parse_all({"(1/2,0)", "(0,1/2)"}));
  CHECK(klein.order() == 4);

  CHECK_THROWS_AS(generate(0, {}), Error);
  CHECK_THROWS_AS(generate(3, parse_all({"(1/2,0)"})), Error);

  GroupLimits tiny{8};
  try {
    generate(2, parse_all({"(1/3,0)", "(0,1/3)"}), tiny);
    FAIL("expected group_too_large");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::group_too_large);
  }
  // Exponent alone exceeds the cap.
  CHECK_THROWS_AS(generate(1, parse_all({"(1/17)"}), tiny), Error);
}

TEST_CASE("intersect") {
  auto g1 = generate(2, kG1), g2 = generate(2, kG2), g3 = generate(2, kG3);
  auto all = intersect(intersect(g1, g2), g3);
  CHECK(same_set(all, kG2));
  CHECK(all.generators().size() == 3);

  CHECK(intersect(g1, g1) == g1);
  auto g13 = intersect(g1, g3);
  CHECK(g13.order() == 3);
  CHECK(same_set(g13, kG2));

  CHECK_THROWS_AS(intersect(g1, FiniteSubgroup(3)), Error);
}

TEST_CASE("element_order") {
  CHECK(element_order(elem({{1, 3}, {1, 3}})) == 3);
  CHECK(element_order(GroupElement::zero(2)) == 1);
  auto g = elem({{5, 6}, {1, 3}});
  CHECK(element_order(g) == 6);
  CHECK(g.scaled(6).is_identity());
  CHECK(!g.scaled(3).is_identity());
}

TEST_CASE("elements come out in lexicographic order") {
  auto g1 = generate(2, parse_all({"(0,1/3)", "(1/3,0)"}));
  auto els = g1.elements();
  CHECK(std::is_sorted(els.begin(), els.end()));
  CHECK(els.front().str() == "(0, 0)");
  CHECK(els[1].str() == "(0, 1/3)");
  CHECK(els.back().str() == "(2/3, 2/3)");
}

TEST_CASE("subgroup properties on random generator sets") {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<long> dim_dist(1, 3), count_dist(0, 3), den_dist(1, 8);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = dim_dist(rng);
    std::vector<GroupElement> gens;
    std::vector<gwmax::testing::RawElement> raw_gens;
    for (long k = count_dist(rng); k > 0; --k) {
      std::vector<mpq_class> v;
      for (std::size_t i = 0; i < n; ++i) {
        long den = den_dist(rng);
        std::uniform_int_distribution<long> num_dist(-2 * den, 2 * den);
        v.emplace_back(num_dist(rng), den);
        v.back().canonicalize();
      }
      auto g = canonicalize(v);
      CHECK(canonicalize(gwmax::testing::raw(g)) == g);  // idempotent
      gens.push_back(g);
      raw_gens.push_back(v);
    }
    auto group = generate(n, gens);
    CHECK(gwmax::testing::raw_set(group) == gwmax::testing::naive_closure(n, raw_gens));

    auto els = group.elements();
    CHECK(group.contains(GroupElement::zero(n)));
    for (const auto& g : gens) {
      CHECK(group.contains(g));
      CHECK(group.order() % element_order(g).get_ui() == 0);
    }
    for (std::size_t i = 0; i < els.size() && i < 20; ++i) {
      CHECK(group.contains(-els[i]));
      for (std::size_t j = 0; j < els.size() && j < 20; ++j) CHECK(group.contains(els[i] + els[j]));
    }

    // Intersections against a second random group.
    std::vector<GroupElement> other;
    for (int k = 0; k < 2; ++k) {
      std::vector<mpq_class> v;
      for (std::size_t i = 0; i < n; ++i) v.emplace_back(den_dist(rng) - 1, den_dist(rng));
      for (auto& x : v) x.canonicalize();
      other.push_back(canonicalize(v));
    }
    auto h = generate(n, other);
    auto gh = intersect(group, h), hg = intersect(h, group);
    CHECK(gh == hg);
    CHECK(group.order() % gh.order() == 0);
    CHECK(h.order() % gh.order() == 0);
    for (const auto& e : gh.elements()) CHECK((group.contains(e) && h.contains(e)));
    std::vector<GroupElement> third_gens{other[0].scaled(2), gens.empty() ? other[1] : gens[0]};
    auto third = generate(n, third_gens);
    CHECK(intersect(intersect(group, h), third) == intersect(group, intersect(h, third)));
  }
}

TEST_CASE("intersect with the solution group of an integer matrix") {
  // G3 is exactly { g : [[0,3],[2,1]] g in Z^2 }.
  std::vector<std::vector<long>> b{{0, 3}, {2, 1}};
  auto g1 = generate(2, kG1);
  CHECK(same_set(intersect(g1, b), kG2));
  CHECK(intersect(generate(2, kG3), b) == generate(2, kG3));
  std::vector<std::vector<long>> wide{{1, 2, 3}};
  CHECK_THROWS_AS(intersect(g1, wide), Error);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> den_dist(1, 12), entry(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<GroupElement> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<mpq_class> v;
      for (std::size_t i = 0; i < n; ++i) v.emplace_back(den_dist(rng) - 1, den_dist(rng));
      for (auto& x : v) x.canonicalize();
      gens.push_back(canonicalize(v));
    }
    auto group = generate(n, gens);
    std::vector<std::vector<long>> rows(1 + trial % 2, std::vector<long>(n));
    for (auto& r : rows)
      for (auto& v : r) v = entry(rng);
    std::set<gwmax::testing::RawElement> want;
    for (const auto& e : group.elements()) {
      bool ok = true;
      for (const auto& r : rows) {
        mpq_class dot = 0;
        for (std::size_t j = 0; j < n; ++j) dot += r[j] * e[j].value();
        ok = ok && dot.get_den() == 1;
      }
      if (ok) want.insert(gwmax::testing::raw(e));
    }
    CHECK(gwmax::testing::raw_set(intersect(group, rows)) == want);
  }
}
