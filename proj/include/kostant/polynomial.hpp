#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kostant {

/// Dense polynomial in q with exact integer coefficients; coeffs()[d] is the
/// coefficient of q^d. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and equality is structural.
///
/// Coefficients are 64-bit and every operation checks for overflow, throwing
/// OverflowError instead of wrapping. Values produced by the partition
/// function are nonnegative; alternating sums may pass through negative ones.
class QPolynomial {
 public:
  using Coefficient = std::int64_t;

  QPolynomial() = default;
  explicit QPolynomial(std::vector<Coefficient> coeffs);
  QPolynomial(std::initializer_list<Coefficient> coeffs);

  static QPolynomial zero() { return {}; }
  static QPolynomial one() { return monomial(0); }
  static QPolynomial monomial(int degree, Coefficient c = 1);
  /// q^a (1+q)^b.
  static QPolynomial q_power_times_one_plus_q(int a, int b);

  std::span<const Coefficient> coeffs() const { return coeffs_; }
  Coefficient coeff(int d) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Smallest exponent with a nonzero coefficient; -1 for zero.
  int lowest_degree() const;
  bool is_nonnegative() const;
  bool is_monomial() const;

  Coefficient evaluate_at_one() const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial operator+(const QPolynomial& other) const;
  QPolynomial operator-(const QPolynomial& other) const;
  QPolynomial operator*(const QPolynomial& other) const;
  QPolynomial operator-() const;
  /// Multiply by q^shift.
  QPolynomial shifted(int shift) const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// Sparse human form: "0", "1", "q + 2q^2 - q^3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Coefficient> coeffs_;
};

QPolynomial::Coefficient checked_add(QPolynomial::Coefficient a, QPolynomial::Coefficient b);
QPolynomial::Coefficient checked_mul(QPolynomial::Coefficient a, QPolynomial::Coefficient b);

}  // namespace kostant
