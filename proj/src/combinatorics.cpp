#include "kostant/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "kostant/errors.hpp"

namespace kostant {

BigCount fibonacci(int n) {
  if (n < 1) throw ArgumentError("fibonacci is indexed from 1 (F_1 = F_2 = 1), got " +
                                 std::to_string(n));
  BigCount prev = 0, cur = 1;  // (F_0, F_1) only as a seed for the loop
  for (int k = 2; k <= n; ++k) {
    BigCount next;
    if (__builtin_add_overflow(prev, cur, &next)) {
      throw OverflowError("F_" + std::to_string(n) + " does not fit in 64 bits");
    }
    prev = cur;
    cur = next;
  }
  return cur;
}

BigCount binomial_safe(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    result = result * static_cast<unsigned __int128>(n - k + t) / static_cast<unsigned __int128>(t);
    if (result > static_cast<unsigned __int128>(std::numeric_limits<BigCount>::max())) {
      throw OverflowError("binomial coefficient does not fit in 64 bits");
    }
  }
  return static_cast<BigCount>(result);
}

namespace {

void extend(int next, int hi, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  out.push_back(current);
  for (int v = next; v <= hi; ++v) {
    current.push_back(v);
    extend(v + 2, hi, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> nonconsecutive_subsets_of_range(int lo, int hi, int cap) {
  const int n = std::max(0, hi - lo + 1);
  if (n > cap) {
    throw CapacityError("nonconsecutive subset enumeration over " + std::to_string(n) +
                        " elements exceeds the cap " + std::to_string(cap));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  extend(lo, hi, current, out);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<int>> nonconsecutive_subsets(int n, int cap) {
  if (n < 0) throw ArgumentError("nonconsecutive_subsets: n must be >= 0");
  return nonconsecutive_subsets_of_range(1, n, cap);
}

BigCount nonconsecutive_count_k(int n, int k) {
  if (n < 0 || k < 0) throw ArgumentError("nonconsecutive_count_k: arguments must be >= 0");
  return binomial_safe(std::int64_t{n} + 1 - k, k);
}

bool fib_identity_check(int n) {
  if (n < 0) throw ArgumentError("fib_identity_check: n must be >= 0");
  BigCount sum = 0;
  for (int k = 0; 2 * k <= n + 1; ++k) sum += nonconsecutive_count_k(n, k);
  return sum == fibonacci(n + 2);
}

}  // namespace kostant
