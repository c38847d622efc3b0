#include "kostant/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "kostant/errors.hpp"

namespace kostant {

using Coefficient = QPolynomial::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("polynomial coefficient overflow");
  return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("polynomial coefficient overflow");
  return out;
}

QPolynomial::QPolynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<Coefficient> coeffs)
    : QPolynomial(std::vector<Coefficient>(coeffs)) {}

QPolynomial QPolynomial::monomial(int degree, Coefficient c) {
  if (degree < 0) throw ArgumentError("negative exponent in monomial");
  std::vector<Coefficient> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::q_power_times_one_plus_q(int a, int b) {
  if (a < 0 || b < 0) throw ArgumentError("negative exponent in q^a (1+q)^b");
  // Binomial row b via Pascal, shifted by a.
  std::vector<Coefficient> row{1};
  for (int n = 1; n <= b; ++n) {
    std::vector<Coefficient> next(row.size() + 1, 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      next[k] = checked_add(next[k], row[k]);
      next[k + 1] = checked_add(next[k + 1], row[k]);
    }
    row = std::move(next);
  }
  std::vector<Coefficient> v(static_cast<std::size_t>(a), 0);
  v.insert(v.end(), row.begin(), row.end());
  return QPolynomial(std::move(v));
}

Coefficient QPolynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

int QPolynomial::lowest_degree() const {
  for (std::size_t d = 0; d < coeffs_.size(); ++d)
    if (coeffs_[d] != 0) return static_cast<int>(d);
  return -1;
}

bool QPolynomial::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coefficient c) { return c >= 0; });
}

bool QPolynomial::is_monomial() const {
  return !coeffs_.empty() && lowest_degree() == degree();
}

Coefficient QPolynomial::evaluate_at_one() const {
  Coefficient sum = 0;
  for (Coefficient c : coeffs_) sum = checked_add(sum, c);
  return sum;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) {
    coeffs_[d] = checked_add(coeffs_[d], other.coeffs_[d]);
  }
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) { return *this += -other; }

QPolynomial QPolynomial::operator+(const QPolynomial& other) const {
  QPolynomial out(*this);
  out += other;
  return out;
}

QPolynomial QPolynomial::operator-(const QPolynomial& other) const {
  QPolynomial out(*this);
  out -= other;
  return out;
}

QPolynomial QPolynomial::operator*(const QPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Coefficient> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) {
      out[a + b] = checked_add(out[a + b], checked_mul(coeffs_[a], other.coeffs_[b]));
    }
  }
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial out(*this);
  for (auto& c : out.coeffs_) c = checked_mul(c, -1);
  return out;
}

QPolynomial QPolynomial::shifted(int shift) const {
  if (shift < 0) throw ArgumentError("negative shift");
  if (is_zero()) return {};
  std::vector<Coefficient> out(static_cast<std::size_t>(shift), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(out));
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    Coefficient c = coeffs_[d];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    // Magnitude as unsigned to survive INT64_MIN.
    auto mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (d == 0 || mag != 1) os << mag;
    if (d >= 1) os << 'q';
    if (d >= 2) os << '^' << d;
    first = false;
  }
  return os.str();
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace kostant
