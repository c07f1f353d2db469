#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gwmax/error.hpp"
#include "gwmax/snf.hpp"
#include "test_support.hpp"

using namespace gwmax;
using namespace gwmax::testing;

namespace {

std::vector<mpz_class> zs(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("smith normal form of x^3 + y^3 + x^2 y") {
  const IntMatrix a{{3, 0}, {0, 3}, {2, 1}};
  auto d = smith_normal_form(a);
  CHECK(d.invariant_factors == zs({1, 3}));
  CHECK(d.S == IntMatrix{{1, 0}, {0, 3}, {0, 0}});
  CHECK(verify(a, d));

  // A hand-checked unimodular pair.
  SmithDecomposition ref{IntMatrix{{1, 0}, {0, 3}, {0, 0}}, IntMatrix{{0, 0, 1}, {1, 0, 0}, {2, 1, -3}},
                         IntMatrix{{0, 1}, {1, -2}}, zs({1, 3})};
  CHECK(verify(a, ref));

  auto swapped = ref;
  swapped.P.swap_rows(0, 1);
  CHECK(!verify(a, swapped));

  auto wrong = ref;
  wrong.invariant_factors[1] = 6;
  wrong.S(1, 1) = 6;
  CHECK(!verify(a, wrong));

  auto mismatch = ref;
  mismatch.invariant_factors[1] = 6;
  CHECK(!verify(a, mismatch));
}

TEST_CASE("smith normal form small cases") {
  CHECK(smith_normal_form(IntMatrix::identity(3)).invariant_factors == zs({1, 1, 1}));
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 2}}).invariant_factors == zs({2, 2}));
  CHECK(smith_normal_form(IntMatrix{{2, 1}, {1, 2}}).invariant_factors == zs({1, 3}));
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).invariant_factors == zs({1, 6}));
  CHECK(smith_normal_form(IntMatrix{{-4}}).invariant_factors == zs({4}));
  CHECK(smith_normal_form(IntMatrix{{0, 4}, {6, 0}}).invariant_factors == zs({2, 12}));

  auto d = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(d.invariant_factors == zs({2, 6, 12}));

  CHECK(error_code([] { smith_normal_form(IntMatrix{{1, 2}, {2, 4}}); }) == Errc::rank_deficient);
  CHECK(error_code([] { smith_normal_form(IntMatrix{{1, 2}}); }) == Errc::rank_deficient);
  CHECK(error_code([] { smith_normal_form(IntMatrix{{0, 0}, {0, 0}, {0, 0}}); }) == Errc::rank_deficient);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::size_t m = n + (trial / 3) % 3;
    IntMatrix a = random_matrix(rng, m, n, 6);
    if (rank(a) < n) continue;
    ++checked;
    CAPTURE(to_string(a));
    auto d = smith_normal_form(a);
    REQUIRE(verify(a, d));

    // a_1 ... a_k = d_k, the gcd of the k x k minors.
    const SmallMatrix s = to_small(a);
    long long prefix = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      prefix *= d.invariant_factors[k - 1].get_si();
      CHECK(prefix == minor_gcd(s, k));
    }
    if (m == n) CHECK(prefix == std::llabs(laplace_det(s)));

    // Invariant under row permutations.
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(smith_normal_form(a.select_rows(perm)).invariant_factors == d.invariant_factors);
  }
  CHECK(checked > 200);
}
