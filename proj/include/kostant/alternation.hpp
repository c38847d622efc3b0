#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "kostant/weights.hpp"
#include "kostant/weyl.hpp"

namespace kostant {

enum class Provenance { BruteForce, Characterized };
std::string_view to_string(Provenance p);

/// The Weyl alternation set: sigma in W with partition(sigma(lambda+rho) - rho - mu) > 0.
/// Elements are deduplicated and ordered by (length, reduced word).
class AlternationSet {
 public:
  AlternationSet(Weight lambda, Weight mu, std::vector<WeylElement> elements,
                 Provenance provenance);

  int rank() const { return lambda_.rank(); }
  const Weight& lambda() const { return lambda_; }
  const Weight& mu() const { return mu_; }
  const std::vector<WeylElement>& elements() const& { return elements_; }
  // Moves out of a temporary so `for (auto& s : make_set().elements())` stays valid.
  std::vector<WeylElement> elements() && { return std::move(elements_); }
  Provenance provenance() const { return provenance_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const WeylElement& sigma) const;

  /// Equality of the underlying sets, ignoring provenance.
  bool same_elements(const AlternationSet& other) const;

 private:
  Weight lambda_;
  Weight mu_;
  std::vector<WeylElement> elements_;
  Provenance provenance_;
};

/// Definition-level construction by enumerating all of W.
/// Throws CapacityError when r > cap.
AlternationSet alt_set_bruteforce(const Weight& lambda, const Weight& mu,
                                  int cap = default_brute_cap());

/// For lambda = highest root and mu = alpha_i + ... + alpha_j: products of
/// pairwise nonconsecutive generators drawn from {2..i-1} and {j+1..r-1}.
AlternationSet alt_set_characterized(const RootInterval& iv);

/// True iff sigma has the shape alt_set_characterized produces for iv: its
/// support avoids 1, i..j and r, and has no two consecutive indices.
bool is_characterized_member(const RootInterval& iv, const WeylElement& sigma);
/// Same test from sigma's length and ascending support.
bool is_characterized_support(const RootInterval& iv, int length, std::span<const int> support);

/// F_i * F_{r-j+1}.
std::int64_t alt_cardinality(const RootInterval& iv);

enum class BoundarySide {
  Left,   // mu = alpha_i + ... + alpha_r, i >= 2; boundary generator s_{i-1}
  Right,  // mu = alpha_1 + ... + alpha_j, j <= r-1; boundary generator s_{j+1}
};

/// Number of elements of the alternation set of a one-sided interval that do
/// (or do not) contain the boundary generator and have k generators besides
/// it, so length k + 1 when contains is set and k otherwise:
///   Right: C(r-j-2-k, k) if contains else C(r-j-1-k, k)
///   Left:  C(i-3-k, k)   if contains else C(i-2-k, k)
/// with binomial_safe's convention for out-of-range arguments.
/// Throws ArgumentError if iv is not one-sided in the requested way.
std::int64_t count_by_length(const RootInterval& iv, int k, BoundarySide side, bool contains);

/// Largest attainable k (as counted above) in the same four cases:
/// floor((r-j-2)/2), floor((r-j-1)/2), floor((i-3)/2), floor((i-2)/2), clamped at 0.
int max_length(const RootInterval& iv, BoundarySide side, bool contains);

}  // namespace kostant
