#include "kostant/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kostant/errors.hpp"

namespace kostant {

namespace {

void require_positive_rank(int r) {
  if (r < 1) throw ArgumentError("rank must be >= 1, got " + std::to_string(r));
}

}  // namespace

Weight::Weight(int rank) {
  require_positive_rank(rank);
  coords_.assign(static_cast<std::size_t>(rank), 0);
}

Weight::Weight(std::vector<Coeff> coords) : coords_(std::move(coords)) {
  require_positive_rank(static_cast<int>(coords_.size()));
}

Weight::Weight(std::initializer_list<Coeff> coords) : Weight(std::vector<Coeff>(coords)) {}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coeff c) { return c == 0; });
}

bool Weight::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coeff c) { return c >= 0; });
}

Weight Weight::operator+(const Weight& other) const {
  require_same_rank(*this, other, "Weight::operator+");
  std::vector<Coeff> out(coords_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += other.coords_[k];
  return Weight(std::move(out));
}

Weight Weight::operator-(const Weight& other) const {
  require_same_rank(*this, other, "Weight::operator-");
  std::vector<Coeff> out(coords_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= other.coords_[k];
  return Weight(std::move(out));
}

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(Coeff factor) const {
  std::vector<Coeff> out(coords_);
  for (auto& c : out) c *= factor;
  return Weight(std::move(out));
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) os << ',';
    os << coords_[k];
  }
  os << ')';
  return os.str();
}

RootInterval::RootInterval(int rank, int i, int j) : rank_(rank), i_(i), j_(j) {
  require_positive_rank(rank);
  if (i < 1 || i > j || j > rank) {
    throw ArgumentError("interval " + std::to_string(i) + ".." + std::to_string(j) +
                        " is not within 1 <= i <= j <= " + std::to_string(rank));
  }
}

std::string RootInterval::to_string() const {
  return std::to_string(i_) + ".." + std::to_string(j_);
}

Weight simple_root(int r, int i) {
  require_positive_rank(r);
  if (i < 1 || i > r) {
    throw ArgumentError("simple root index " + std::to_string(i) + " outside 1.." +
                        std::to_string(r));
  }
  std::vector<Coeff> c(static_cast<std::size_t>(r), 0);
  c[static_cast<std::size_t>(i - 1)] = 1;
  return Weight(std::move(c));
}

Weight interval_root(const RootInterval& iv) {
  std::vector<Coeff> c(static_cast<std::size_t>(iv.rank()), 0);
  for (int k = iv.i(); k <= iv.j(); ++k) c[static_cast<std::size_t>(k - 1)] = 1;
  return Weight(std::move(c));
}

Weight highest_root(int r) { return interval_root(RootInterval(r, 1, r)); }

Coeff height(const Weight& w) {
  auto c = w.coords();
  return std::accumulate(c.begin(), c.end(), Coeff{0});
}

Weight two_rho(int r) {
  require_positive_rank(r);
  std::vector<Coeff> c(static_cast<std::size_t>(r));
  for (int k = 1; k <= r; ++k) c[static_cast<std::size_t>(k - 1)] = Coeff{k} * (r + 1 - k);
  return Weight(std::move(c));
}

std::vector<RootInterval> all_intervals(int r) {
  require_positive_rank(r);
  std::vector<RootInterval> out;
  out.reserve(static_cast<std::size_t>(r * (r + 1) / 2));
  for (int i = 1; i <= r; ++i)
    for (int j = i; j <= r; ++j) out.emplace_back(r, i, j);
  return out;
}

void require_same_rank(const Weight& a, const Weight& b, const char* where) {
  if (a.rank() != b.rank()) {
    throw ArgumentError(std::string(where) + ": rank mismatch (" + std::to_string(a.rank()) +
                        " vs " + std::to_string(b.rank()) + ")");
  }
}

}  // namespace kostant
