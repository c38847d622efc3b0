#include "kostant/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "kostant/errors.hpp"

namespace kostant {

WeylElement WeylElement::identity(int r) {
  if (r < 1) throw ArgumentError("rank must be >= 1, got " + std::to_string(r));
  std::vector<int> perm(static_cast<std::size_t>(r + 1));
  std::iota(perm.begin(), perm.end(), 1);
  return WeylElement(std::move(perm));
}

WeylElement WeylElement::from_word(int r, std::span<const int> word) {
  WeylElement sigma = identity(r);
  // Right-multiplying by s_k swaps positions k and k+1 of the one-line form.
  for (int letter : word) {
    if (letter < 1 || letter > r) {
      throw ArgumentError("generator s_" + std::to_string(letter) + " outside 1.." +
                          std::to_string(r));
    }
    std::swap(sigma.perm_[static_cast<std::size_t>(letter - 1)],
              sigma.perm_[static_cast<std::size_t>(letter)]);
  }
  return sigma;
}

WeylElement WeylElement::from_word(int r, std::initializer_list<int> word) {
  return from_word(r, std::span<const int>(word.begin(), word.size()));
}

WeylElement WeylElement::from_perm(std::vector<int> perm) {
  if (perm.size() < 2) throw ArgumentError("permutation must have at least 2 entries");
  std::vector<bool> seen(perm.size() + 1, false);
  for (int v : perm) {
    if (v < 1 || v > static_cast<int>(perm.size()) || seen[static_cast<std::size_t>(v)]) {
      throw ArgumentError("not a permutation of 1.." + std::to_string(perm.size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return WeylElement(std::move(perm));
}

int WeylElement::length() const {
  int inversions = 0;
  for (std::size_t a = 0; a < perm_.size(); ++a)
    for (std::size_t b = a + 1; b < perm_.size(); ++b)
      if (perm_[a] > perm_[b]) ++inversions;
  return inversions;
}

std::vector<int> WeylElement::reduced_word() const {
  std::vector<int> p = perm_;
  std::vector<int> reversed;
  reversed.reserve(p.size() * 2);
  // Strip the largest right descent each time; products of commuting
  // generators come out in ascending order.
  for (;;) {
    int descent = 0;
    for (int k = static_cast<int>(p.size()) - 1; k >= 1; --k) {
      if (p[static_cast<std::size_t>(k - 1)] > p[static_cast<std::size_t>(k)]) {
        descent = k;
        break;
      }
    }
    if (descent == 0) break;
    std::swap(p[static_cast<std::size_t>(descent - 1)], p[static_cast<std::size_t>(descent)]);
    reversed.push_back(descent);
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::vector<int> WeylElement::support() const {
  std::vector<int> word = reduced_word();
  std::sort(word.begin(), word.end());
  word.erase(std::unique(word.begin(), word.end()), word.end());
  return word;
}

bool WeylElement::contains_generator(int k) const {
  auto s = support();
  return std::binary_search(s.begin(), s.end(), k);
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  if (rank() != other.rank()) throw ArgumentError("WeylElement::operator*: rank mismatch");
  std::vector<int> out(perm_.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = perm_[static_cast<std::size_t>(other.perm_[k] - 1)];
  }
  return WeylElement(std::move(out));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> out(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    out[static_cast<std::size_t>(perm_[k] - 1)] = static_cast<int>(k) + 1;
  }
  return WeylElement(std::move(out));
}

std::string WeylElement::to_string() const {
  auto word = reduced_word();
  if (word.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << ' ';
    os << 's' << word[k];
  }
  return os.str();
}

Weight apply(const WeylElement& sigma, const Weight& w) {
  const int r = w.rank();
  if (sigma.rank() != r) {
    throw ArgumentError("apply: Weyl element of rank " + std::to_string(sigma.rank()) +
                        " acting on weight of rank " + std::to_string(r));
  }
  const auto c = w.coords();
  const auto perm = sigma.perm();
  // epsilon coordinates: e_1 = c_1, e_k = c_k - c_{k-1}, e_{r+1} = -c_r.
  std::vector<Coeff> eps(static_cast<std::size_t>(r + 1));
  Coeff prev = 0;
  for (int k = 0; k < r; ++k) {
    eps[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)] - prev;
    prev = c[static_cast<std::size_t>(k)];
  }
  eps[static_cast<std::size_t>(r)] = -prev;
  // sigma(eps_k) = eps_{sigma(k)}.
  std::vector<Coeff> moved(eps.size());
  for (std::size_t k = 0; k < eps.size(); ++k) {
    moved[static_cast<std::size_t>(perm[k] - 1)] = eps[k];
  }
  std::vector<Coeff> out(static_cast<std::size_t>(r));
  Coeff partial = 0;
  for (int k = 0; k < r; ++k) {
    partial += moved[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] = partial;
  }
  return Weight(std::move(out));
}

Weight shifted_action(const WeylElement& sigma, const Weight& lambda) {
  if (sigma.rank() != lambda.rank()) {
    throw ArgumentError("shifted_action: rank mismatch");
  }
  const Weight rho2 = two_rho(lambda.rank());
  const Weight doubled = apply(sigma, lambda.scaled(2) + rho2) - rho2;
  std::vector<Coeff> half(doubled.coords().begin(), doubled.coords().end());
  for (auto& v : half) {
    if (v % 2 != 0) throw InternalError("shifted_action: sigma(rho) - rho left the root lattice");
    v /= 2;
  }
  return Weight(std::move(half));
}

int default_brute_cap() {
  if (const char* env = std::getenv("KOSTANT_MAX_BRUTE_RANK")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return kBuiltinBruteCap;
}

void check_brute_cap(int r, int cap) {
  if (r < 1) throw ArgumentError("rank must be >= 1, got " + std::to_string(r));
  if (r > cap) {
    throw CapacityError("rank " + std::to_string(r) + " exceeds the brute-force cap " +
                        std::to_string(cap) +
                        " on full Weyl group enumeration; raise it with --brute-cap or "
                        "KOSTANT_MAX_BRUTE_RANK");
  }
}

WeylGroupRange::iterator::iterator(std::vector<int> perm, int fixed_prefix)
    : perm_(std::move(perm)),
      fixed_prefix_(fixed_prefix),
      current_(WeylElement::from_perm(perm_)),
      done_(false) {}

WeylGroupRange::iterator& WeylGroupRange::iterator::operator++() {
  auto tail = perm_.begin() + fixed_prefix_;
  if (!std::next_permutation(tail, perm_.end())) {
    done_ = true;
    return *this;
  }
  current_ = WeylElement::from_perm(perm_);
  return *this;
}

WeylGroupRange::iterator WeylGroupRange::begin() const {
  std::vector<int> perm(static_cast<std::size_t>(rank_ + 1));
  if (first_ == 0) {
    std::iota(perm.begin(), perm.end(), 1);
    return iterator(std::move(perm), 0);
  }
  perm[0] = first_;
  int v = 1;
  for (std::size_t k = 1; k < perm.size(); ++k, ++v) {
    if (v == first_) ++v;
    perm[k] = v;
  }
  return iterator(std::move(perm), 1);
}

WeylGroupRange enumerate_all(int r, int cap) {
  check_brute_cap(r, cap);
  return WeylGroupRange(r, 0);
}

WeylGroupRange enumerate_block(int r, int first, int cap) {
  check_brute_cap(r, cap);
  if (first < 1 || first > r + 1) {
    throw ArgumentError("block index " + std::to_string(first) + " outside 1.." +
                        std::to_string(r + 1));
  }
  return WeylGroupRange(r, first);
}

}  // namespace kostant
