#include "kostant/multiplicity.hpp"

#include <algorithm>

#include "kostant/alternation.hpp"
#include "kostant/errors.hpp"
#include "kostant/partition.hpp"

namespace kostant {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::KwmfFull: return "kwmf_full";
    case Method::KwmfAltset: return "kwmf_altset";
    case Method::ClosedForm: return "closed_form";
  }
  return "unknown";
}

std::optional<Method> method_from_string(std::string_view s) {
  if (s == "kwmf_full") return Method::KwmfFull;
  if (s == "kwmf_altset") return Method::KwmfAltset;
  if (s == "closed_form") return Method::ClosedForm;
  return std::nullopt;
}

std::optional<RootInterval> as_interval_root(const Weight& w) {
  const auto c = w.coords();
  int first = 0, last = 0;
  for (int k = 1; k <= w.rank(); ++k) {
    const Coeff v = c[static_cast<std::size_t>(k - 1)];
    if (v == 0) continue;
    if (v != 1) return std::nullopt;
    if (first == 0) first = k;
    else if (last != k - 1) return std::nullopt;
    last = k;
  }
  if (first == 0) return std::nullopt;
  return RootInterval(w.rank(), first, last);
}

namespace {

struct SignedSum {
  QPolynomial value;
  std::int64_t nonzero_terms = 0;

  void add(const WeylElement& sigma, const QPolynomial& term) {
    if (term.is_zero()) return;
    ++nonzero_terms;
    if (sigma.length() % 2 == 0) value += term;
    else value -= term;
  }
};

MultiplicityReport make_report(const Weight& lambda, const Weight& mu, Method method,
                               SignedSum sum) {
  MultiplicityReport report;
  report.rank = lambda.rank();
  report.lambda = lambda;
  report.mu = mu;
  report.multiplicity_at_one = sum.value.evaluate_at_one();
  report.q_multiplicity = std::move(sum.value);
  report.method = method;
  report.term_count = sum.nonzero_terms;
  return report;
}

RootInterval require_highest_root_and_interval(const Weight& lambda, const Weight& mu, Method method) {
  const int r = lambda.rank();
  auto iv = as_interval_root(mu);
  if (lambda != highest_root(r) || !iv) {
    throw ArgumentError(std::string(to_string(method)) +
                        " needs lambda = highest root and mu = alpha_i + ... + alpha_j; got lambda " +
                        lambda.to_string() + ", mu " + mu.to_string());
  }
  return *iv;
}

}  // namespace

MultiplicityReport q_multiplicity(const Weight& lambda, const Weight& mu, Method method, int cap) {
  require_same_rank(lambda, mu, "q_multiplicity");
  const int r = lambda.rank();
  switch (method) {
    case Method::KwmfFull: {
      auto blocks = map_weyl_blocks(r, cap, [&](int first) {
        SignedSum sum;
        for (const WeylElement& sigma : enumerate_block(r, first, cap)) {
          sum.add(sigma, kostant_q(r, shifted_action(sigma, lambda) - mu));
        }
        return sum;
      });
      SignedSum total;
      for (auto& b : blocks) {
        total.value += b.value;
        total.nonzero_terms += b.nonzero_terms;
      }
      return make_report(lambda, mu, method, std::move(total));
    }
    case Method::KwmfAltset: {
      const RootInterval iv = require_highest_root_and_interval(lambda, mu, method);
      SignedSum sum;
      const auto set = alt_set_characterized(iv);
      for (const WeylElement& sigma : set.elements()) {
        sum.add(sigma, kostant_q(r, shifted_action(sigma, lambda) - mu));
      }
      return make_report(lambda, mu, method, std::move(sum));
    }
    case Method::ClosedForm:
      return q_multiplicity_closed_report(require_highest_root_and_interval(lambda, mu, method));
  }
  throw InternalError("unhandled method");
}

std::int64_t multiplicity_at_one(const Weight& lambda, const Weight& mu, int cap) {
  return q_multiplicity(lambda, mu, Method::KwmfFull, cap).multiplicity_at_one;
}

QPolynomial closed_form_term(const RootInterval& iv, const WeylElement& sigma) {
  const auto word = sigma.reduced_word();
  auto support = word;
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  const int len = static_cast<int>(word.size());
  if (sigma.rank() != iv.rank() || !is_characterized_support(iv, len, support)) {
    throw ArgumentError("closed_form_term: " + sigma.to_string() +
                        " is not in the alternation set of mu = " + iv.to_string() + " in rank " +
                        std::to_string(iv.rank()));
  }
  auto has = [&](int g) { return std::binary_search(support.begin(), support.end(), g); };
  const int r = iv.rank();
  int absent = 0;
  if (iv.i() > 1 && !has(iv.i() - 1)) ++absent;
  if (iv.j() < r && !has(iv.j() + 1)) ++absent;
  const int q_exp = len + absent;
  const int one_plus_q_exp = r - iv.height() - 2 * len - absent;
  if (one_plus_q_exp < 0) {
    throw InternalError("closed_form_term: negative (1+q) exponent for " + sigma.to_string());
  }
  return QPolynomial::q_power_times_one_plus_q(q_exp, one_plus_q_exp);
}

MultiplicityReport q_multiplicity_closed_report(const RootInterval& iv) {
  SignedSum sum;
  const auto set = alt_set_characterized(iv);
  for (const WeylElement& sigma : set.elements()) {
    sum.add(sigma, closed_form_term(iv, sigma));
  }
  return make_report(highest_root(iv.rank()), interval_root(iv), Method::ClosedForm,
                     std::move(sum));
}

QPolynomial q_multiplicity_closed(const RootInterval& iv) {
  return q_multiplicity_closed_report(iv).q_multiplicity;
}

QPolynomial predicted_q_multiplicity(const RootInterval& iv) {
  return QPolynomial::monomial(iv.rank() - iv.height());
}

}  // namespace kostant
