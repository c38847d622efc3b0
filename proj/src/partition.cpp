#include "kostant/partition.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>

#include "kostant/errors.hpp"

namespace kostant {

std::vector<RootInterval> positive_roots(int r) { return all_intervals(r); }

std::size_t PartitionEngine::KeyHash::operator()(const std::vector<Coeff>& key) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Coeff v : key) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

PartitionEngine::PartitionEngine(int rank, std::size_t max_cache_entries)
    : rank_(rank), max_cache_entries_(max_cache_entries), roots_(positive_roots(rank)) {}

QPolynomial PartitionEngine::q_analog(const Weight& xi) const {
  if (xi.rank() != rank_) {
    throw ArgumentError("kostant_q: weight of rank " + std::to_string(xi.rank()) +
                        " given to rank " + std::to_string(rank_));
  }
  if (!xi.is_nonnegative()) return QPolynomial::zero();
  if (xi.is_zero()) return QPolynomial::one();
  std::vector<Coeff> remaining(xi.coords().begin(), xi.coords().end());
  return solve(0, remaining);
}

QPolynomial::Coefficient PartitionEngine::count(const Weight& xi) const {
  return q_analog(xi).evaluate_at_one();
}

std::size_t PartitionEngine::cache_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void PartitionEngine::clear_cache() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

QPolynomial PartitionEngine::solve(std::size_t root_index, std::vector<Coeff>& remaining) const {
  if (root_index == roots_.size()) {
    return std::all_of(remaining.begin(), remaining.end(), [](Coeff c) { return c == 0; })
               ? QPolynomial::one()
               : QPolynomial::zero();
  }
  const RootInterval& root = roots_[root_index];
  const auto lo = static_cast<std::size_t>(root.i() - 1);
  const auto hi = static_cast<std::size_t>(root.j() - 1);

  // Coordinates before this root's row are already forced to zero.
  std::vector<Coeff> key;
  key.reserve(remaining.size() - lo + 1);
  key.push_back(static_cast<Coeff>(root_index));
  key.insert(key.end(), remaining.begin() + static_cast<std::ptrdiff_t>(lo), remaining.end());
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  Coeff max_copies = *std::min_element(remaining.begin() + static_cast<std::ptrdiff_t>(lo),
                                       remaining.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  Coeff min_copies = 0;
  if (root.j() == rank_) {
    // Last root of row i: it alone must clear coordinate i.
    if (remaining[lo] > max_copies) {
      min_copies = 1;
      max_copies = 0;
    } else {
      min_copies = max_copies = remaining[lo];
    }
  }

  QPolynomial result;
  for (Coeff m = min_copies; m <= max_copies; ++m) {
    for (std::size_t k = lo; k <= hi; ++k) remaining[k] -= m;
    QPolynomial sub = solve(root_index + 1, remaining);
    for (std::size_t k = lo; k <= hi; ++k) remaining[k] += m;
    if (!sub.is_zero()) result += sub.shifted(static_cast<int>(m));
  }

  std::unique_lock lock(mutex_);
  if (max_cache_entries_ == 0 || memo_.size() < max_cache_entries_) {
    memo_.try_emplace(std::move(key), result);
  }
  return result;
}

namespace {

std::size_t initial_cache_cap() {
  if (const char* env = std::getenv("KOSTANT_PARTITION_CACHE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return 0;
}

std::atomic<std::size_t>& cache_cap() {
  static std::atomic<std::size_t> cap{initial_cache_cap()};
  return cap;
}

}  // namespace

void set_partition_cache_cap(std::size_t max_entries) { cache_cap().store(max_entries); }

PartitionEngine& shared_partition_engine(int r) {
  static std::mutex registry_mutex;
  static std::map<int, std::unique_ptr<PartitionEngine>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[r];
  if (!slot) slot = std::make_unique<PartitionEngine>(r, cache_cap().load());
  return *slot;
}

QPolynomial kostant_q(int r, const Weight& xi) {
  if (xi.rank() != r) throw ArgumentError("kostant_q: rank mismatch");
  return shared_partition_engine(r).q_analog(xi);
}

QPolynomial::Coefficient kostant_count(int r, const Weight& xi) {
  return kostant_q(r, xi).evaluate_at_one();
}

namespace {

void enumerate_decompositions(const std::vector<RootInterval>& roots, std::size_t start,
                              std::vector<Coeff>& remaining, int used,
                              std::vector<QPolynomial::Coefficient>& counts) {
  auto first_nonzero = std::find_if(remaining.begin(), remaining.end(),
                                    [](Coeff c) { return c != 0; });
  if (first_nonzero == remaining.end()) {
    if (counts.size() <= static_cast<std::size_t>(used)) counts.resize(used + 1, 0);
    counts[static_cast<std::size_t>(used)] += 1;
    return;
  }
  const int lowest = static_cast<int>(first_nonzero - remaining.begin()) + 1;
  for (std::size_t t = start; t < roots.size(); ++t) {
    const RootInterval& root = roots[t];
    // Roots are sorted by i; none later can cover coordinate `lowest`.
    if (root.i() > lowest) break;
    bool fits = true;
    for (int k = root.i(); k <= root.j(); ++k) {
      if (remaining[static_cast<std::size_t>(k - 1)] < 1) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    for (int k = root.i(); k <= root.j(); ++k) remaining[static_cast<std::size_t>(k - 1)] -= 1;
    enumerate_decompositions(roots, t, remaining, used + 1, counts);
    for (int k = root.i(); k <= root.j(); ++k) remaining[static_cast<std::size_t>(k - 1)] += 1;
  }
}

}  // namespace

QPolynomial kostant_q_oracle(int r, const Weight& xi, int height_cap) {
  if (xi.rank() != r) throw ArgumentError("kostant_q_oracle: rank mismatch");
  if (!xi.is_nonnegative()) return QPolynomial::zero();
  if (height(xi) > height_cap) {
    throw CapacityError("oracle height cap " + std::to_string(height_cap) + " exceeded by " +
                        xi.to_string());
  }
  const auto roots = positive_roots(r);
  std::vector<Coeff> remaining(xi.coords().begin(), xi.coords().end());
  std::vector<QPolynomial::Coefficient> counts;
  enumerate_decompositions(roots, 0, remaining, 0, counts);
  return QPolynomial(std::move(counts));
}

QPolynomial consecutive_closed_form(int s) {
  if (s < 1) throw ArgumentError("consecutive_closed_form requires s >= 1");
  return QPolynomial::q_power_times_one_plus_q(1, s - 1);
}

}  // namespace kostant
