#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "kostant/polynomial.hpp"
#include "kostant/weights.hpp"
#include "kostant/weyl.hpp"

namespace kostant {

enum class Method {
  KwmfFull,    // alternating sum over all of W
  KwmfAltset,  // same sum restricted to the characterized alternation set
  ClosedForm,  // characterized set with the closed-form partition values
};
std::string_view to_string(Method m);
std::optional<Method> method_from_string(std::string_view s);

struct MultiplicityReport {
  int rank = 0;
  Weight lambda{1};
  Weight mu{1};
  QPolynomial q_multiplicity;
  std::int64_t multiplicity_at_one = 0;
  Method method = Method::KwmfFull;
  /// Number of sigma whose partition term is nonzero.
  std::int64_t term_count = 0;

  friend bool operator==(const MultiplicityReport&, const MultiplicityReport&) = default;
};

/// If w = alpha_i + ... + alpha_j for some i <= j, that interval.
std::optional<RootInterval> as_interval_root(const Weight& w);

/// q-analog of Kostant's weight multiplicity formula:
///   sum over sigma of (-1)^len(sigma) * partition_q(sigma(lambda+rho) - rho - mu).
/// KwmfFull accepts any root-lattice lambda, mu and needs r <= cap.
/// KwmfAltset needs lambda = highest root and mu an interval root.
/// ClosedForm is not accepted here; use q_multiplicity_closed.
MultiplicityReport q_multiplicity(const Weight& lambda, const Weight& mu, Method method,
                                  int cap = default_brute_cap());

std::int64_t multiplicity_at_one(const Weight& lambda, const Weight& mu,
                                 int cap = default_brute_cap());

/// Closed-form value of partition_q(sigma(highest + rho) - rho - mu) for sigma
/// in the characterized alternation set of iv:
///   q^(len + absent) (1+q)^(r - h - 2 len - absent)
/// where absent counts the boundary generators s_{i-1} (when i > 1) and
/// s_{j+1} (when j < r) missing from sigma. Throws ArgumentError if sigma is
/// not in the set.
QPolynomial closed_form_term(const RootInterval& iv, const WeylElement& sigma);

/// Alternating sum of closed_form_term over the characterized set. No rank cap.
QPolynomial q_multiplicity_closed(const RootInterval& iv);
MultiplicityReport q_multiplicity_closed_report(const RootInterval& iv);

/// q^(r - h(mu)).
QPolynomial predicted_q_multiplicity(const RootInterval& iv);

}  // namespace kostant
