#include <doctest.h>

#include <algorithm>
#include <set>

#include "kostant/alternation.hpp"
#include "kostant/combinatorics.hpp"
#include "kostant/errors.hpp"
#include "kostant/partition.hpp"

using namespace kostant;

namespace {

WeylElement word(int r, std::initializer_list<int> letters) { return WeylElement::from_word(r, letters); }

std::set<WeylElement> as_set(const AlternationSet& s) {
  return {s.elements().begin(), s.elements().end()};
}

}  // namespace

TEST_CASE("brute-force examples") {
  const auto a = alt_set_bruteforce(highest_root(2), simple_root(2, 1));
  CHECK(as_set(a) == std::set<WeylElement>{WeylElement::identity(2)});
  CHECK(a.provenance() == Provenance::BruteForce);

  const auto b = alt_set_bruteforce(highest_root(3), simple_root(3, 1));
  CHECK(as_set(b) == std::set<WeylElement>{WeylElement::identity(3), word(3, {2})});

  CHECK(alt_set_bruteforce(highest_root(2), highest_root(2)).size() == 1);
  CHECK_THROWS_AS(alt_set_bruteforce(highest_root(9), simple_root(9, 1), 8), CapacityError);
  CHECK_THROWS_AS(alt_set_bruteforce(highest_root(3), simple_root(2, 1)), ArgumentError);
}

TEST_CASE("characterized examples") {
  CHECK(as_set(alt_set_characterized(RootInterval(5, 2, 3))) ==
        std::set<WeylElement>{WeylElement::identity(5), word(5, {4})});
  CHECK(alt_set_characterized(RootInterval(4, 2, 3)).size() == 1);
  const auto s = alt_set_characterized(RootInterval(7, 3, 4));
  CHECK(as_set(s) == std::set<WeylElement>{WeylElement::identity(7), word(7, {2}), word(7, {5}),
                                           word(7, {6}), word(7, {2, 5}), word(7, {2, 6})});
  CHECK(s.provenance() == Provenance::Characterized);
  // Ordered by length, then reduced word.
  CHECK(s.elements().front() == WeylElement::identity(7));
  CHECK(s.elements().back() == word(7, {2, 6}));
  CHECK(to_string(Provenance::Characterized) == "characterized");
  CHECK(to_string(Provenance::BruteForce) == "brute_force");
}

TEST_CASE("brute force equals the characterization for r <= 5") {
  for (int r = 1; r <= 5; ++r) {
    for (const auto& iv : all_intervals(r)) {
      const auto brute = alt_set_bruteforce(highest_root(r), interval_root(iv));
      const auto characterized = alt_set_characterized(iv);
      CHECK(brute.same_elements(characterized));
      CHECK(brute.elements() == characterized.elements());
      for (const auto& sigma : enumerate_all(r)) CHECK(brute.contains(sigma) == is_characterized_member(iv, sigma));
    }
  }
}

TEST_CASE("members have positive partition values and are products of commuting generators") {
  for (int r = 1; r <= 10; ++r) {
    for (const auto& iv : all_intervals(r)) {
      const Weight mu = interval_root(iv);
      for (const auto& sigma : alt_set_characterized(iv).elements()) {
        CHECK(kostant_count(r, shifted_action(sigma, highest_root(r)) - mu) > 0);
        const auto support = sigma.support();
        CHECK(sigma.length() == static_cast<int>(support.size()));
        for (int g : support) CHECK((g < iv.i() || g > iv.j()));
        for (std::size_t a = 1; a < support.size(); ++a) CHECK(support[a] - support[a - 1] >= 2);
        for (int g : support) CHECK((g != 1 && g != r));
      }
    }
  }
}

TEST_CASE("construction deduplicates") {
  const int r = 4;
  std::vector<WeylElement> xs{word(r, {3}), WeylElement::identity(r), word(r, {1, 1, 3})};
  AlternationSet s(highest_root(r), simple_root(r, 1), xs, Provenance::BruteForce);
  CHECK(s.size() == 2);
  CHECK(s.elements()[0] == WeylElement::identity(r));
}

TEST_CASE("alt_cardinality") {
  CHECK(alt_cardinality(RootInterval(7, 3, 4)) == 6);
  CHECK(alt_cardinality(RootInterval(12, 6, 6)) == 104);
  for (int r = 1; r <= 12; ++r) {
    CHECK(alt_cardinality(RootInterval(r, 1, r)) == 1);
    for (const auto& iv : all_intervals(r)) {
      CHECK(alt_cardinality(iv) == fibonacci(iv.i()) * fibonacci(r - iv.j() + 1));
      CHECK(static_cast<std::int64_t>(alt_set_characterized(iv).size()) == alt_cardinality(iv));
    }
  }
}

TEST_CASE("count_by_length and max_length examples") {
  CHECK(count_by_length(RootInterval(10, 1, 3), 2, BoundarySide::Right, true) == 3);
  CHECK(count_by_length(RootInterval(10, 1, 3), 2, BoundarySide::Right, false) == 6);
  CHECK(count_by_length(RootInterval(10, 5, 10), 0, BoundarySide::Left, false) == 1);
  CHECK(max_length(RootInterval(10, 1, 3), BoundarySide::Right, true) == 2);
  CHECK(max_length(RootInterval(10, 1, 3), BoundarySide::Right, false) == 3);
  CHECK(max_length(RootInterval(5, 5, 5), BoundarySide::Left, true) == 1);
}

TEST_CASE("count_by_length preconditions") {
  CHECK_THROWS_AS(count_by_length(RootInterval(6, 2, 4), 0, BoundarySide::Right, true), ArgumentError);
  CHECK_THROWS_AS(count_by_length(RootInterval(6, 1, 6), 0, BoundarySide::Right, true), ArgumentError);
  CHECK_THROWS_AS(count_by_length(RootInterval(6, 1, 4), 0, BoundarySide::Left, true), ArgumentError);
  CHECK_THROWS_AS(count_by_length(RootInterval(6, 1, 4), -1, BoundarySide::Right, false), ArgumentError);
  CHECK_THROWS_AS(max_length(RootInterval(6, 3, 4), BoundarySide::Left, false), ArgumentError);
}

TEST_CASE("length counts match direct filtering for r <= 10") {
  for (int r = 1; r <= 10; ++r) {
    for (const auto& iv : all_intervals(r)) {
      for (auto side : {BoundarySide::Left, BoundarySide::Right}) {
        const bool applicable = side == BoundarySide::Right ? (iv.i() == 1 && iv.j() < r)
                                                            : (iv.j() == r && iv.i() > 1);
        if (!applicable) continue;
        const int boundary = side == BoundarySide::Right ? iv.j() + 1 : iv.i() - 1;
        for (bool contains : {true, false}) {
          // k counts the generators other than the boundary one.
          std::vector<std::int64_t> by_k(static_cast<std::size_t>(r + 2), 0);
          for (const auto& sigma : alt_set_characterized(iv).elements()) {
            if (sigma.contains_generator(boundary) != contains) continue;
            ++by_k[static_cast<std::size_t>(sigma.length() - (contains ? 1 : 0))];
          }
          int attained = -1;
          for (int k = 0; k <= r + 1; ++k) {
            CHECK(count_by_length(iv, k, side, contains) == by_k[static_cast<std::size_t>(k)]);
            if (by_k[static_cast<std::size_t>(k)] > 0) attained = k;
          }
          CHECK(max_length(iv, side, contains) == std::max(attained, 0));
        }
      }
    }
  }
}
