#pragma once

#include <cstddef>
#include <future>
#include <iterator>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "kostant/weights.hpp"

namespace kostant {

/// Element of the Weyl group of A_r, i.e. the symmetric group S_{r+1}, stored
/// in one-line notation: perm()[k-1] is the image of k.
///
/// The simple reflection s_i is the transposition (i, i+1). Words compose with
/// the rightmost letter applied first, so from_word({a, b}) = s_a * s_b and
/// (s_a * s_b)(w) = s_a(s_b(w)).
class WeylElement {
 public:
  static WeylElement identity(int r);
  /// Throws ArgumentError on letters outside 1..r.
  static WeylElement from_word(int r, std::span<const int> word);
  static WeylElement from_word(int r, std::initializer_list<int> word);
  /// Throws ArgumentError unless perm is a permutation of 1..r+1.
  static WeylElement from_perm(std::vector<int> perm);

  int rank() const { return static_cast<int>(perm_.size()) - 1; }
  std::span<const int> perm() const { return perm_; }

  /// Number of inversions of perm, equal to the minimal word length.
  int length() const;

  /// One reduced word, obtained by repeatedly stripping a right descent.
  std::vector<int> reduced_word() const;

  /// Generator indices appearing in any reduced word, ascending.
  std::vector<int> support() const;
  bool contains_generator(int k) const;

  /// Composition: (a * b)(w) = a(b(w)).
  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

  /// "1" for the identity, else the reduced word as "s2 s5".
  std::string to_string() const;

 private:
  explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {}
  std::vector<int> perm_;
};

/// Linear action on the root lattice, computed through epsilon coordinates.
Weight apply(const WeylElement& sigma, const Weight& w);

/// sigma(lambda + rho) - rho, computed as (sigma(2 lambda + 2 rho) - 2 rho) / 2.
Weight shifted_action(const WeylElement& sigma, const Weight& lambda);

/// Largest rank for which full enumeration of W is allowed without an
/// explicit override. Reads KOSTANT_MAX_BRUTE_RANK, defaulting to 8.
int default_brute_cap();
inline constexpr int kBuiltinBruteCap = 8;

/// Throws CapacityError when r > cap.
void check_brute_cap(int r, int cap);

/// Input range over all (r+1)! elements in lexicographic one-line order.
class WeylGroupRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = WeylElement;
    using difference_type = std::ptrdiff_t;
    using pointer = const WeylElement*;
    using reference = const WeylElement&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class WeylGroupRange;
    iterator(std::vector<int> perm, int fixed_prefix);
    std::vector<int> perm_;
    int fixed_prefix_ = 0;
    WeylElement current_ = WeylElement::identity(1);
    bool done_ = true;
  };

  iterator begin() const;
  std::default_sentinel_t end() const { return {}; }

 private:
  friend WeylGroupRange enumerate_all(int r, int cap);
  friend WeylGroupRange enumerate_block(int r, int first, int cap);
  WeylGroupRange(int r, int first) : rank_(r), first_(first) {}
  int rank_;
  int first_;  // 0 = whole group, else fix perm[0] = first
};

/// Every element of W(A_r) exactly once, lexicographic one-line order.
/// Throws CapacityError when r exceeds cap.
WeylGroupRange enumerate_all(int r, int cap = default_brute_cap());

/// The r! elements with perm[0] == first, lexicographic. Concatenating the
/// blocks first = 1..r+1 reproduces enumerate_all.
WeylGroupRange enumerate_block(int r, int first, int cap = default_brute_cap());

/// Runs fn(first) for each block of W(A_r) on its own thread and returns the
/// per-block results in block order. Aggregation over the results must not
/// depend on scheduling.
template <class Fn>
auto map_weyl_blocks(int r, int cap, Fn fn) {
  check_brute_cap(r, cap);
  using Result = decltype(fn(1));
  std::vector<Result> results;
  results.reserve(static_cast<std::size_t>(r + 1));
  if (std::thread::hardware_concurrency() <= 1 || r < 4) {
    for (int first = 1; first <= r + 1; ++first) results.push_back(fn(first));
    return results;
  }
  std::vector<std::future<Result>> pending;
  for (int first = 1; first <= r + 1; ++first) {
    pending.push_back(std::async(std::launch::async, fn, first));
  }
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

}  // namespace kostant
