#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paperlab/delta.hpp"

using namespace paperlab;

TEST_CASE("compose: pointwise evaluation") {
  CHECK(compose(identity_map(2), identity_map(2)) == identity_map(2));
  // d^1 : [1]->[2] after s^0 : [2]->[1]
  MonotoneMap c = compose(coface(1, 2), codegeneracy(0, 1));
  CHECK(c == MonotoneMap(2, 2, {0, 0, 2}));
  CHECK(compose(MonotoneMap(1, 3, {0, 1}), MonotoneMap(1, 1, {0, 0})) ==
        MonotoneMap(1, 3, {0, 0}));
  CHECK_THROWS_AS(compose(coface(0, 1), coface(0, 1)), CompositionMismatch);
}

TEST_CASE("ez_factorize basics") {
  auto f = ez_factorize(identity_map(3));
  CHECK(f.surjection == identity_map(3));
  CHECK(f.injection == identity_map(3));

  auto g = ez_factorize(MonotoneMap(2, 1, {0, 0, 1}));
  CHECK(g.surjection == MonotoneMap(2, 1, {0, 0, 1}));
  CHECK(g.injection == identity_map(1));

  auto h = ez_factorize(MonotoneMap(2, 2, {0, 0, 2}));
  CHECK(h.surjection == MonotoneMap(2, 1, {0, 0, 1}));
  CHECK(h.injection == MonotoneMap(1, 2, {0, 2}));
}

TEST_CASE("ez_factorize: uniqueness by exhaustion, dims <= 4") {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (const auto& f : all_monotone(a, b)) {
        auto ez = ez_factorize(f);
        CHECK(ez.surjection.is_surjective());
        CHECK(ez.injection.is_injective());
        CHECK(compose(ez.injection, ez.surjection) == f);
        // exhaustive search for any other factorization through any middle
        int found = 0;
        for (int m = 0; m <= std::min(a, b); ++m)
          for (const auto& s : all_surjective(a, m))
            for (const auto& i : all_injective(m, b))
              if (compose(i, s) == f) ++found;
        CHECK(found == 1);
      }
    }
  }
}

TEST_CASE("cosimplicial identities up to dimension 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)  // d^j d^i = d^i d^{j+1}? standard: for i < j
        if (i < j)
          CHECK(compose(coface(j, n), coface(i, n - 1)) ==
                compose(coface(i, n), coface(j - 1, n - 1)));
    for (int i = 0; i + 1 <= n - 1; ++i)
      for (int j = i; j <= n - 2; ++j)
        if (i <= j && n >= 2)
          CHECK(compose(codegeneracy(j, n - 2), codegeneracy(i, n - 1)) ==
                compose(codegeneracy(i, n - 2), codegeneracy(j + 1, n - 1)));
    // mixed identities
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n - 1; ++j) {
        MonotoneMap lhs = compose(codegeneracy(j, n - 1), coface(i, n));
        MonotoneMap rhs =
            i < j   ? compose(coface(i, n - 1), codegeneracy(j - 1, n - 2 >= 0 ? n - 2 : 0))
            : i > j + 1 ? compose(coface(i - 1, n - 1), codegeneracy(j, n >= 2 ? n - 2 : 0))
                        : identity_map(n - 1);
        if (i == j || i == j + 1) {
          CHECK(lhs == identity_map(n - 1));
        } else if (n >= 2) {
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("ordinal_sum") {
  CHECK(ordinal_sum(identity_map(0), identity_map(0)) == identity_map(1));
  CHECK(ordinal_sum(identity_map(1), identity_map(1)) == identity_map(3));
  CHECK(ordinal_sum(coface(0, 1), codegeneracy(0, 1)) ==
        MonotoneMap(3, 3, {1, 2, 2, 3}));
}

TEST_CASE("ordinal_sum functoriality, dims <= 3") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (const auto& fp : all_monotone(a, b))
          for (const auto& f : all_monotone(b, c))
            for (const auto& gp : all_monotone(a, b))
              for (const auto& g : all_monotone(b, c))
                CHECK(ordinal_sum(compose(f, fp), compose(g, gp)) ==
                      compose(ordinal_sum(f, g), ordinal_sum(fp, gp)));
}

TEST_CASE("reverse") {
  CHECK(reverse(identity_map(3)) == identity_map(3));
  CHECK(reverse(coface(0, 1)) == MonotoneMap(0, 1, {0}));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& f : all_monotone(a, b)) CHECK(reverse(reverse(f)) == f);
  // contravariant-free functoriality: r(f o g) = r(f) o r(g)
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (const auto& g : all_monotone(a, b))
          for (const auto& f : all_monotone(b, c))
            CHECK(reverse(compose(f, g)) == compose(reverse(f), reverse(g)));
}

TEST_CASE("counting") {
  CHECK(all_monotone(1, 3).size() == 10);
  CHECK(all_injective(2, 3).size() == 4);
  CHECK(all_surjective(3, 1).size() == 3);
  CHECK(missing_values(MonotoneMap(1, 3, {0, 2})) == std::vector<int>{3, 1});
}
