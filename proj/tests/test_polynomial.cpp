#include <doctest.h>

#include <limits>

#include "kostant/errors.hpp"
#include "kostant/polynomial.hpp"

using namespace kostant;

TEST_CASE("construction trims trailing zeros") {
  CHECK(QPolynomial{1, 2, 0, 0}.coeffs().size() == 2);
  CHECK(QPolynomial{0, 0}.is_zero());
  CHECK(QPolynomial::zero().degree() == -1);
  CHECK(QPolynomial::one() == QPolynomial{1});
  CHECK(QPolynomial::monomial(3) == QPolynomial{0, 0, 0, 1});
  CHECK(QPolynomial::monomial(2, 0).is_zero());
}

TEST_CASE("q^a (1+q)^b") {
  CHECK(QPolynomial::q_power_times_one_plus_q(1, 2) == QPolynomial{0, 1, 2, 1});
  CHECK(QPolynomial::q_power_times_one_plus_q(0, 0) == QPolynomial::one());
  CHECK(QPolynomial::q_power_times_one_plus_q(2, 4).evaluate_at_one() == 16);
  CHECK_THROWS_AS(QPolynomial::q_power_times_one_plus_q(0, -1), ArgumentError);
}

TEST_CASE("arithmetic") {
  const QPolynomial a{0, 1, 2, 1};
  const QPolynomial b{0, 1, 1};
  CHECK(a - b == QPolynomial{0, 0, 1, 1});
  CHECK(a - b - QPolynomial::monomial(2) == QPolynomial::monomial(3));
  CHECK(a - a == QPolynomial::zero());
  CHECK(b * b == QPolynomial{0, 0, 1, 2, 1});
  CHECK(a * QPolynomial::zero() == QPolynomial::zero());
  CHECK(-b == QPolynomial{0, -1, -1});
  CHECK(b.shifted(2) == QPolynomial{0, 0, 0, 1, 1});
  QPolynomial acc;
  acc += a;
  acc -= b;
  CHECK(acc == a - b);
}

TEST_CASE("queries") {
  const QPolynomial p{0, 0, 3, 0, -1};
  CHECK(p.degree() == 4);
  CHECK(p.lowest_degree() == 2);
  CHECK(p.coeff(2) == 3);
  CHECK(p.coeff(9) == 0);
  CHECK_FALSE(p.is_nonnegative());
  CHECK_FALSE(p.is_monomial());
  CHECK(QPolynomial::monomial(5).is_monomial());
  CHECK(QPolynomial::monomial(5, 2).is_monomial());
  CHECK(p.evaluate_at_one() == 2);
}

TEST_CASE("to_string") {
  CHECK(QPolynomial::zero().to_string() == "0");
  CHECK(QPolynomial::one().to_string() == "1");
  CHECK(QPolynomial::monomial(3).to_string() == "q^3");
  CHECK(QPolynomial{0, 1, 2, 1}.to_string() == "q + 2q^2 + q^3");
  CHECK(QPolynomial{2, -1, 0, -3}.to_string() == "2 - q - 3q^3");
}

TEST_CASE("overflow is detected") {
  constexpr auto big = std::numeric_limits<QPolynomial::Coefficient>::max();
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), OverflowError);
  CHECK(checked_mul(-3, 4) == -12);
  const QPolynomial p{big};
  CHECK_THROWS_AS(p + QPolynomial::one(), OverflowError);
  CHECK_THROWS_AS(p * QPolynomial{2}, OverflowError);
}
