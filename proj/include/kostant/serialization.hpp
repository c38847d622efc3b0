#pragma once

#include <nlohmann/json.hpp>

#include "kostant/alternation.hpp"
#include "kostant/multiplicity.hpp"
#include "kostant/polynomial.hpp"
#include "kostant/weights.hpp"
#include "kostant/weyl.hpp"

namespace kostant {

// Weight      <-> [c1, ..., cr]
// QPolynomial <-> {"coeffs": [c0, c1, ...]}   ("pretty" is emitted, ignored on read)
// WeylElement <-> {"word": [...], "perm": [...]}
// AlternationSet -> {"rank", "mu": [i, j] or coords, "count", "elements": [[word]...], "provenance"}
// MultiplicityReport <-> {"rank", "lambda", "mu", "q_multiplicity", "multiplicity_at_one",
//                         "method", "term_count"}

void to_json(nlohmann::json& j, const QPolynomial& p);
void from_json(const nlohmann::json& j, QPolynomial& p);

void to_json(nlohmann::json& j, const WeylElement& sigma);
WeylElement weyl_element_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const AlternationSet& set);

void to_json(nlohmann::json& j, const MultiplicityReport& report);
void from_json(const nlohmann::json& j, MultiplicityReport& report);

}  // namespace kostant

template <>
struct nlohmann::adl_serializer<kostant::Weight> {
  static kostant::Weight from_json(const json& j);
  static void to_json(json& j, const kostant::Weight& w);
};
