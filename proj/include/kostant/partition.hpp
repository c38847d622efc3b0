#pragma once

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "kostant/polynomial.hpp"
#include "kostant/weights.hpp"

namespace kostant {

/// Positive roots of A_r as intervals, ordered lexicographically by (i, j).
std::vector<RootInterval> positive_roots(int r);

/// Memoized q-analog of Kostant's partition function for a fixed rank.
///
/// Roots are processed in (i, j) order; the state is (root index, remaining
/// weight) and the step is "use m copies of this root, recurse on the next".
/// Once the last root starting at row a has been handled, coordinate a can no
/// longer change, so a nonzero value there prunes the branch.
///
/// Safe to call from several threads: the memo is guarded by a shared mutex
/// and every thread observes identical values.
class PartitionEngine {
 public:
  /// max_cache_entries == 0 means unbounded.
  explicit PartitionEngine(int rank, std::size_t max_cache_entries = 0);

  int rank() const { return rank_; }

  /// Coefficient of q^d counts multisets of d positive roots summing to xi.
  QPolynomial q_analog(const Weight& xi) const;
  /// q_analog(xi) at q = 1.
  QPolynomial::Coefficient count(const Weight& xi) const;

  std::size_t cache_size() const;
  void clear_cache();

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<Coeff>& key) const noexcept;
  };

  QPolynomial solve(std::size_t root_index, std::vector<Coeff>& remaining) const;

  int rank_;
  std::size_t max_cache_entries_;
  std::vector<RootInterval> roots_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::vector<Coeff>, QPolynomial, KeyHash> memo_;
};

/// Process-wide engine for rank r, created on first use.
PartitionEngine& shared_partition_engine(int r);

/// Bound applied by shared engines created after the call; 0 = unbounded.
/// Also read from KOSTANT_PARTITION_CACHE_CAP at first use.
void set_partition_cache_cap(std::size_t max_entries);

QPolynomial kostant_q(int r, const Weight& xi);
QPolynomial::Coefficient kostant_count(int r, const Weight& xi);

inline constexpr int kDefaultOracleHeightCap = 24;

/// Same contract as kostant_q, by plain depth-first enumeration of
/// nondecreasing root-index sequences with no memo. Test oracle only.
/// Throws CapacityError when height(xi) > height_cap.
QPolynomial kostant_q_oracle(int r, const Weight& xi, int height_cap = kDefaultOracleHeightCap);

/// q (1+q)^(s-1): the value on any interval root of height s.
QPolynomial consecutive_closed_form(int s);

}  // namespace kostant
