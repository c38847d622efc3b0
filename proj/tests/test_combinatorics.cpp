#include <doctest.h>

#include <vector>

#include "kostant/combinatorics.hpp"
#include "kostant/errors.hpp"

using namespace kostant;

namespace {

// Pascal's triangle, zero outside 0 <= k <= n.
std::vector<std::vector<BigCount>> pascal(int rows) {
  std::vector<std::vector<BigCount>> t(static_cast<std::size_t>(rows + 1));
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(static_cast<std::size_t>(n + 1), 1);
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

bool nonconsecutive(const std::vector<int>& s) {
  for (std::size_t a = 1; a < s.size(); ++a)
    if (s[a] - s[a - 1] < 2) return false;
  return true;
}

}  // namespace

TEST_CASE("fibonacci") {
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(3) == 2);
  CHECK(fibonacci(10) == 55);
  CHECK(fibonacci(92) == 7540113804746346429LL);
  for (int n = 3; n <= 90; ++n) CHECK(fibonacci(n) == fibonacci(n - 1) + fibonacci(n - 2));
  CHECK_THROWS_AS(fibonacci(0), ArgumentError);
  CHECK_THROWS_AS(fibonacci(-4), ArgumentError);
  CHECK_THROWS_AS(fibonacci(93), OverflowError);
}

TEST_CASE("binomial_safe") {
  CHECK(binomial_safe(5, 2) == 10);
  CHECK(binomial_safe(-1, 0) == 0);
  CHECK(binomial_safe(3, 0) == 1);
  CHECK(binomial_safe(3, 4) == 0);
  CHECK(binomial_safe(3, -1) == 0);
  const auto t = pascal(60);
  for (int n = 0; n <= 60; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial_safe(n, k) == t[n][k]);
}

TEST_CASE("nonconsecutive_subsets") {
  CHECK(nonconsecutive_subsets(0) == std::vector<std::vector<int>>{{}});
  CHECK(nonconsecutive_subsets(1) == std::vector<std::vector<int>>{{}, {1}});
  CHECK(nonconsecutive_subsets(3) == std::vector<std::vector<int>>{{}, {1}, {2}, {3}, {1, 3}});
  CHECK(nonconsecutive_subsets_of_range(5, 6) == std::vector<std::vector<int>>{{}, {5}, {6}});
  CHECK(nonconsecutive_subsets_of_range(3, 2) == std::vector<std::vector<int>>{{}});
  CHECK_THROWS_AS(nonconsecutive_subsets(26), CapacityError);
  CHECK_THROWS_AS(nonconsecutive_subsets(-1), ArgumentError);
}

TEST_CASE("subset enumeration against bitmask filtering") {
  for (int n = 0; n <= 16; ++n) {
    const auto subsets = nonconsecutive_subsets(n);
    std::size_t expected = 0;
    std::vector<BigCount> by_size(static_cast<std::size_t>(n + 2), 0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (mask & (mask >> 1)) continue;
      ++expected;
      ++by_size[static_cast<std::size_t>(__builtin_popcount(mask))];
    }
    CHECK(subsets.size() == expected);
    CHECK(static_cast<BigCount>(subsets.size()) == fibonacci(n + 2));
    for (const auto& s : subsets) {
      CHECK(nonconsecutive(s));
      for (int x : s) CHECK((x >= 1 && x <= n));
    }
    for (int k = 0; k <= n + 1; ++k) CHECK(nonconsecutive_count_k(n, k) == by_size[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("nonconsecutive_count_k") {
  CHECK(nonconsecutive_count_k(4, 2) == 3);
  CHECK(nonconsecutive_count_k(3, 2) == 1);
  for (int n = 0; n <= 20; ++n) CHECK(nonconsecutive_count_k(n, 0) == 1);
}

TEST_CASE("binomial sum identity") {
  for (int n = 0; n <= 60; ++n) {
    BigCount sum = 0;
    for (int k = 0; k <= n + 1; ++k) sum += binomial_safe(n + 1 - k, k);
    CHECK(sum == fibonacci(n + 2));
    CHECK(fib_identity_check(n));
  }
}
