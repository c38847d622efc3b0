#include <doctest.h>

#include "kostant/alternation.hpp"
#include "kostant/multiplicity.hpp"
#include "kostant/serialization.hpp"

using namespace kostant;
using nlohmann::json;

TEST_CASE("polynomial round trip") {
  const QPolynomial p{0, 1, 2, 1};
  const json j = p;
  CHECK(j["coeffs"] == json::array({0, 1, 2, 1}));
  CHECK(j["pretty"] == "q + 2q^2 + q^3");
  CHECK(json::parse(j.dump()).get<QPolynomial>() == p);
  CHECK(json(QPolynomial::zero())["coeffs"].empty());
}

TEST_CASE("weight round trip") {
  const Weight w{3, -1, 0};
  const json j = w;
  CHECK(j == json::array({3, -1, 0}));
  CHECK(j.get<Weight>() == w);
}

TEST_CASE("Weyl element round trip") {
  const auto sigma = WeylElement::from_word(5, {2, 5});
  const json j = sigma;
  CHECK(j["word"] == json::array({2, 5}));
  CHECK(weyl_element_from_json(json::parse(j.dump())) == sigma);
  json bad = j;
  bad["word"] = json::array({3});
  CHECK_THROWS(weyl_element_from_json(bad));
}

TEST_CASE("alternation set schema") {
  const json j = alt_set_characterized(RootInterval(7, 3, 4));
  CHECK(j["rank"] == 7);
  CHECK(j["mu"] == json::array({3, 4}));
  CHECK(j["count"] == 6);
  CHECK(j["provenance"] == "characterized");
  CHECK(j["elements"].size() == 6);
  CHECK(j["elements"][0] == json::array());
  CHECK(j["elements"][5] == json::array({2, 6}));
}

TEST_CASE("multiplicity report round trip") {
  for (auto method : {Method::KwmfFull, Method::KwmfAltset, Method::ClosedForm}) {
    const auto report = q_multiplicity(highest_root(5), interval_root(RootInterval(5, 2, 3)), method);
    const json j = report;
    CHECK(j["method"] == std::string(to_string(method)));
    CHECK(json::parse(j.dump()).get<MultiplicityReport>() == report);
  }
}
