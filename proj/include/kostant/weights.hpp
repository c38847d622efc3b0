#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kostant {

using Coeff = std::int64_t;

/// A weight of A_r written in the simple-root basis: coords[k-1] is the
/// coefficient of alpha_k. Values are immutable and compared exactly.
class Weight {
 public:
  /// Zero weight of rank r.
  explicit Weight(int rank);
  explicit Weight(std::vector<Coeff> coords);
  Weight(std::initializer_list<Coeff> coords);

  int rank() const { return static_cast<int>(coords_.size()); }
  std::span<const Coeff> coords() const { return coords_; }
  /// 1-based access, matching the alpha_k indexing.
  Coeff operator[](int k) const { return coords_[static_cast<std::size_t>(k - 1)]; }

  bool is_zero() const;
  bool is_nonnegative() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator-() const;
  Weight scaled(Coeff factor) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::vector<Coeff> coords_;
};

/// The positive root alpha_i + ... + alpha_j of A_r, 1 <= i <= j <= r.
class RootInterval {
 public:
  RootInterval(int rank, int i, int j);

  int rank() const { return rank_; }
  int i() const { return i_; }
  int j() const { return j_; }
  int height() const { return j_ - i_ + 1; }

  friend bool operator==(const RootInterval&, const RootInterval&) = default;

  std::string to_string() const;

 private:
  int rank_;
  int i_;
  int j_;
};

Weight simple_root(int r, int i);
Weight interval_root(const RootInterval& iv);
Weight highest_root(int r);

/// Sum of the simple-root coordinates. Negative for some non-positive weights.
Coeff height(const Weight& w);

/// 2*rho. rho itself is not integral in this basis for every r (e.g. r = 3),
/// so only the doubled vector is ever materialized. Coordinate k is k(r+1-k).
Weight two_rho(int r);

/// All intervals of A_r ordered lexicographically by (i, j).
std::vector<RootInterval> all_intervals(int r);

void require_same_rank(const Weight& a, const Weight& b, const char* where);

}  // namespace kostant
