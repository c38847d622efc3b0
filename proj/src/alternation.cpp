#include "kostant/alternation.hpp"

#include <algorithm>
#include <limits>

#include "kostant/combinatorics.hpp"
#include "kostant/errors.hpp"
#include "kostant/partition.hpp"

namespace kostant {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::BruteForce: return "brute_force";
    case Provenance::Characterized: return "characterized";
  }
  return "unknown";
}


AlternationSet::AlternationSet(Weight lambda, Weight mu, std::vector<WeylElement> elements,
                               Provenance provenance)
    : lambda_(std::move(lambda)),
      mu_(std::move(mu)),
      elements_(std::move(elements)),
      provenance_(provenance) {
  require_same_rank(lambda_, mu_, "AlternationSet");
  for (const auto& sigma : elements_) {
    if (sigma.rank() != lambda_.rank()) throw ArgumentError("AlternationSet: element rank mismatch");
  }
  // Equal elements share a reduced word, so they end up adjacent after the sort.
  struct Keyed {
    std::vector<int> word;
    WeylElement element;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(elements_.size());
  for (auto& sigma : elements_) keyed.push_back({sigma.reduced_word(), std::move(sigma)});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  elements_.clear();
  for (auto& k : keyed) {
    if (elements_.empty() || elements_.back() != k.element) elements_.push_back(std::move(k.element));
  }
}

bool AlternationSet::contains(const WeylElement& sigma) const {
  return std::find(elements_.begin(), elements_.end(), sigma) != elements_.end();
}

bool AlternationSet::same_elements(const AlternationSet& other) const {
  if (lambda_.rank() != other.lambda_.rank()) return false;
  auto a = elements_, b = other.elements_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

AlternationSet alt_set_bruteforce(const Weight& lambda, const Weight& mu, int cap) {
  require_same_rank(lambda, mu, "alt_set_bruteforce");
  const int r = lambda.rank();
  auto blocks = map_weyl_blocks(r, cap, [&](int first) {
    std::vector<WeylElement> members;
    for (const WeylElement& sigma : enumerate_block(r, first, cap)) {
      if (kostant_count(r, shifted_action(sigma, lambda) - mu) > 0) members.push_back(sigma);
    }
    return members;
  });
  std::vector<WeylElement> all;
  for (auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  return AlternationSet(lambda, mu, std::move(all), Provenance::BruteForce);
}

AlternationSet alt_set_characterized(const RootInterval& iv) {
  const int r = iv.rank();
  // Both ranges have at most r - 2 members; the subset cap is sized to fit.
  const auto left = nonconsecutive_subsets_of_range(2, iv.i() - 1, std::max(r, 1));
  const auto right = nonconsecutive_subsets_of_range(iv.j() + 1, r - 1, std::max(r, 1));
  std::vector<WeylElement> elements;
  elements.reserve(left.size() * right.size());
  std::vector<int> word;
  for (const auto& l : left) {
    for (const auto& rt : right) {
      word = l;
      word.insert(word.end(), rt.begin(), rt.end());
      elements.push_back(WeylElement::from_word(r, word));
    }
  }
  AlternationSet set(highest_root(r), interval_root(iv), std::move(elements),
                     Provenance::Characterized);
  // Spot-check the defining inequality at the two ends of the ordering.
  if (r <= 12) {
    for (const WeylElement* sigma : {&set.elements().front(), &set.elements().back()}) {
      if (kostant_count(r, shifted_action(*sigma, set.lambda()) - set.mu()) <= 0) {
        throw InternalError("characterized element " + sigma->to_string() +
                            " fails the alternation-set condition");
      }
    }
  }
  return set;
}

bool is_characterized_member(const RootInterval& iv, const WeylElement& sigma) {
  return sigma.rank() == iv.rank() && is_characterized_support(iv, sigma.length(), sigma.support());
}

bool is_characterized_support(const RootInterval& iv, int length, std::span<const int> support) {
  for (std::size_t k = 0; k < support.size(); ++k) {
    const int g = support[k];
    const bool in_left = g >= 2 && g <= iv.i() - 1;
    const bool in_right = g >= iv.j() + 1 && g <= iv.rank() - 1;
    if (!in_left && !in_right) return false;
    if (k > 0 && support[k - 1] + 1 == g) return false;
  }
  // A product of distinct commuting generators has length equal to its support size.
  return length == static_cast<int>(support.size());
}

std::int64_t alt_cardinality(const RootInterval& iv) {
  std::int64_t out;
  if (__builtin_mul_overflow(fibonacci(iv.i()), fibonacci(iv.rank() - iv.j() + 1), &out)) {
    throw OverflowError("alternation set cardinality does not fit in 64 bits");
  }
  return out;
}

namespace {

void require_one_sided(const RootInterval& iv, BoundarySide side) {
  if (side == BoundarySide::Right) {
    if (iv.i() != 1 || iv.j() > iv.rank() - 1) {
      throw ArgumentError("right-boundary length counts need mu = alpha_1 + ... + alpha_j with j <= r-1, got " +
                          iv.to_string() + " in rank " + std::to_string(iv.rank()));
    }
  } else if (iv.j() != iv.rank() || iv.i() < 2) {
    throw ArgumentError("left-boundary length counts need mu = alpha_i + ... + alpha_r with i >= 2, got " +
                        iv.to_string() + " in rank " + std::to_string(iv.rank()));
  }
}

// Size of the range from which the non-boundary generators are drawn.
std::int64_t free_span(const RootInterval& iv, BoundarySide side) {
  return side == BoundarySide::Right ? std::int64_t{iv.rank()} - iv.j() : std::int64_t{iv.i()} - 1;
}

std::int64_t floor_half(std::int64_t n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

}  // namespace

std::int64_t count_by_length(const RootInterval& iv, int k, BoundarySide side, bool contains) {
  require_one_sided(iv, side);
  if (k < 0) throw ArgumentError("count_by_length: k must be >= 0");
  // Right: C(r-j-2-k, k) / C(r-j-1-k, k); Left: C(i-3-k, k) / C(i-2-k, k).
  const std::int64_t top = free_span(iv, side) - (contains ? 2 : 1) - k;
  return binomial_safe(top, k);
}

int max_length(const RootInterval& iv, BoundarySide side, bool contains) {
  require_one_sided(iv, side);
  const std::int64_t n = free_span(iv, side) - (contains ? 2 : 1);
  return static_cast<int>(std::max<std::int64_t>(0, floor_half(n)));
}

}  // namespace kostant
