#include <doctest.h>

#include "kostant/errors.hpp"
#include "kostant/weights.hpp"

using namespace kostant;

TEST_CASE("simple_root") {
  CHECK(simple_root(3, 2) == Weight{0, 1, 0});
  CHECK(simple_root(1, 1) == Weight{1});
  CHECK_THROWS_AS(simple_root(3, 4), ArgumentError);
  CHECK_THROWS_AS(simple_root(3, 0), ArgumentError);
  CHECK_THROWS_AS(simple_root(0, 1), ArgumentError);
}

TEST_CASE("interval_root") {
  CHECK(interval_root(RootInterval(5, 2, 4)) == Weight{0, 1, 1, 1, 0});
  CHECK(interval_root(RootInterval(4, 1, 4)) == Weight{1, 1, 1, 1});
  CHECK(interval_root(RootInterval(4, 1, 4)) == highest_root(4));
  CHECK(interval_root(RootInterval(3, 2, 2)) == simple_root(3, 2));
}

TEST_CASE("RootInterval rejects bad bounds") {
  CHECK_THROWS_AS(RootInterval(3, 2, 1), ArgumentError);
  CHECK_THROWS_AS(RootInterval(3, 0, 1), ArgumentError);
  CHECK_THROWS_AS(RootInterval(3, 1, 4), ArgumentError);
  CHECK_NOTHROW(RootInterval(3, 3, 3));
}

TEST_CASE("height") {
  CHECK(height(Weight{1, 1, 1}) == 3);
  CHECK(height(interval_root(RootInterval(9, 3, 7))) == 5);
  CHECK(height(Weight{-1, 1, 0}) == 0);
  for (int r = 1; r <= 9; ++r)
    for (const auto& iv : all_intervals(r)) CHECK(height(interval_root(iv)) == iv.j() - iv.i() + 1);
}

TEST_CASE("two_rho equals the sum of positive roots") {
  CHECK(two_rho(1) == Weight{1});
  CHECK(two_rho(2) == Weight{2, 2});
  CHECK(two_rho(3) == Weight{3, 4, 3});
  for (int r = 1; r <= 12; ++r) {
    Weight sum(r);
    for (const auto& iv : all_intervals(r)) sum = sum + interval_root(iv);
    CHECK(two_rho(r) == sum);
    const Weight tr = two_rho(r);
    const auto c = tr.coords();
    for (int k = 0; k < r; ++k) CHECK(c[static_cast<std::size_t>(k)] == c[static_cast<std::size_t>(r - 1 - k)]);
  }
}

TEST_CASE("weight arithmetic is exact and rank-checked") {
  Weight a{3, -2, 5};
  Weight b{-1, 4, 0};
  CHECK(a + b == Weight{2, 2, 5});
  CHECK(a - b == Weight{4, -6, 5});
  CHECK(-a == Weight{-3, 2, -5});
  CHECK(a.scaled(2) == Weight{6, -4, 10});
  CHECK(a[2] == -2);
  CHECK_FALSE(a.is_nonnegative());
  CHECK(Weight(4).is_zero());
  CHECK_THROWS_AS((a + Weight{1, 1}), ArgumentError);
  CHECK(a.to_string() == "(3,-2,5)");
}

TEST_CASE("all_intervals is ordered by (i, j)") {
  auto ivs = all_intervals(3);
  REQUIRE(ivs.size() == 6);
  CHECK(ivs[0] == RootInterval(3, 1, 1));
  CHECK(ivs[2] == RootInterval(3, 1, 3));
  CHECK(ivs[3] == RootInterval(3, 2, 2));
  CHECK(ivs[5] == RootInterval(3, 3, 3));
}
