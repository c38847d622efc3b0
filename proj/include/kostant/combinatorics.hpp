#pragma once

#include <cstdint>
#include <vector>

namespace kostant {

using BigCount = std::int64_t;

/// F_1 = F_2 = 1. F_0 is deliberately undefined: n < 1 throws ArgumentError.
/// Throws OverflowError past F_92.
BigCount fibonacci(int n);

/// C(n, k) for 0 <= k <= n; zero whenever k < 0, n < 0 or k > n.
/// In particular C(n, 0) = 0 for negative n.
BigCount binomial_safe(std::int64_t n, std::int64_t k);

inline constexpr int kDefaultSubsetCap = 25;

/// Subsets of {1..n} with no two consecutive members, ordered by size and
/// then lexicographically. There are F_{n+2} of them.
/// Throws CapacityError when n > cap.
std::vector<std::vector<int>> nonconsecutive_subsets(int n, int cap = kDefaultSubsetCap);

/// Same enumeration over an arbitrary integer range {lo..hi} (empty if lo > hi).
std::vector<std::vector<int>> nonconsecutive_subsets_of_range(int lo, int hi,
                                                              int cap = kDefaultSubsetCap);

/// Number of k-element nonconsecutive subsets of {1..n}: C(n+1-k, k).
BigCount nonconsecutive_count_k(int n, int k);

/// sum_k C(n+1-k, k) == F_{n+2}.
bool fib_identity_check(int n);

}  // namespace kostant
