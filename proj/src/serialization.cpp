#include "kostant/serialization.hpp"

#include "kostant/errors.hpp"

using nlohmann::json;

kostant::Weight nlohmann::adl_serializer<kostant::Weight>::from_json(const json& j) {
  return kostant::Weight(j.get<std::vector<kostant::Coeff>>());
}

void nlohmann::adl_serializer<kostant::Weight>::to_json(json& j, const kostant::Weight& w) {
  j = json::array();
  for (kostant::Coeff c : w.coords()) j.push_back(c);
}

namespace kostant {

void to_json(json& j, const QPolynomial& p) {
  j = json{{"coeffs", std::vector<QPolynomial::Coefficient>(p.coeffs().begin(), p.coeffs().end())},
           {"pretty", p.to_string()}};
}

void from_json(const json& j, QPolynomial& p) {
  p = QPolynomial(j.at("coeffs").get<std::vector<QPolynomial::Coefficient>>());
}

void to_json(json& j, const WeylElement& sigma) {
  j = json{{"word", sigma.reduced_word()},
           {"perm", std::vector<int>(sigma.perm().begin(), sigma.perm().end())}};
}

WeylElement weyl_element_from_json(const json& j) {
  auto sigma = WeylElement::from_perm(j.at("perm").get<std::vector<int>>());
  if (j.contains("word")) {
    auto word = j.at("word").get<std::vector<int>>();
    if (WeylElement::from_word(sigma.rank(), word) != sigma) {
      throw ArgumentError("Weyl element JSON: word and perm disagree");
    }
  }
  return sigma;
}

void to_json(json& j, const AlternationSet& set) {
  json mu;
  if (auto iv = as_interval_root(set.mu())) {
    mu = json::array({iv->i(), iv->j()});
  } else {
    mu = set.mu();
  }
  json elements = json::array();
  for (const auto& sigma : set.elements()) elements.push_back(sigma.reduced_word());
  j = json{{"rank", set.rank()},
           {"mu", mu},
           {"count", set.size()},
           {"elements", elements},
           {"provenance", to_string(set.provenance())}};
}

void to_json(json& j, const MultiplicityReport& report) {
  j = json{{"rank", report.rank},
           {"lambda", report.lambda},
           {"mu", report.mu},
           {"q_multiplicity", report.q_multiplicity},
           {"multiplicity_at_one", report.multiplicity_at_one},
           {"method", to_string(report.method)},
           {"term_count", report.term_count}};
}

void from_json(const json& j, MultiplicityReport& report) {
  report.rank = j.at("rank").get<int>();
  report.lambda = j.at("lambda").get<Weight>();
  report.mu = j.at("mu").get<Weight>();
  report.q_multiplicity = j.at("q_multiplicity").get<QPolynomial>();
  report.multiplicity_at_one = j.at("multiplicity_at_one").get<std::int64_t>();
  auto method = method_from_string(j.at("method").get<std::string>());
  if (!method) throw ArgumentError("unknown method in report JSON");
  report.method = *method;
  report.term_count = j.at("term_count").get<std::int64_t>();
}

}  // namespace kostant
