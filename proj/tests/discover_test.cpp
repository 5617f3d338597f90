#include <doctest.h>

#include <cmath>

#include "cyclotrig/discover.hpp"
#include "cyclotrig/parse.hpp"
#include "test_util.hpp"

using namespace cyclotrig;

namespace {

Identity from_text(const std::string& s) {
  size_t eq = s.find('=');
  REQUIRE(eq != std::string::npos);
  return make_identity(lower(*parse(s.substr(0, eq))),
                       lower(*parse(s.substr(eq + 1))));
}

bool contains(const std::vector<Identity>& ids, const std::string& text) {
  Identity target = from_text(text);
  for (const auto& id : ids)
    if (same_identity(id, target)) return true;
  return false;
}

DiscoveryConfig seven_config() {
  DiscoveryConfig cfg;
  cfg.denominators = {7};
  cfg.coeff_set = {Rational(4), Rational(-4)};
  cfg.max_sin_terms = 1;
  cfg.surd_candidates = {7};
  return cfg;
}

}  // namespace

TEST_CASE("recovers the sqrt(7) single-sin family exactly") {
  DiscoveryReport report = discover(seven_config());
  CHECK(report.found.size() == 3);
  CHECK(contains(report.found, "tan(pi/7) - 4 sin(2pi/7) = -sqrt(7)"));
  CHECK(contains(report.found, "tan(2pi/7) - 4 sin(3pi/7) = -sqrt(7)"));
  CHECK(contains(report.found, "tan(3pi/7) - 4 sin(pi/7) = sqrt(7)"));
  CHECK(report.candidates_scanned > 0);
  CHECK(report.prefilter_pass >= report.found.size());
}

TEST_CASE("finds the coefficient-2 sqrt(3) identity at denominator 9") {
  DiscoveryConfig cfg;
  cfg.denominators = {9};
  cfg.coeff_set = {Rational(2), Rational(-2)};
  cfg.max_sin_terms = 3;
  cfg.surd_candidates = {3};
  DiscoveryReport report = discover(cfg);
  CHECK(contains(report.found,
                 "tan(pi/9) + 2 sin(pi/9) - 2 sin(2pi/9) + 2 sin(4pi/9) = sqrt(3)"));
}

TEST_CASE("lone tangent search comes back empty") {
  DiscoveryConfig cfg;
  cfg.denominators = {11};
  cfg.coeff_set = {};
  cfg.max_sin_terms = 0;
  cfg.surd_candidates = {11};
  DiscoveryReport report = discover(cfg);
  CHECK(report.found.empty());
  CHECK(report.candidates_scanned > 0);
}

TEST_CASE("no false positives and deterministic output") {
  DiscoveryReport a = discover(seven_config());
  DiscoveryReport b = discover(seven_config());
  REQUIRE(a.found.size() == b.found.size());
  for (size_t i = 0; i < a.found.size(); ++i) {
    CHECK(render(a.found[i]) == render(b.found[i]));
    CHECK(verify(a.found[i]).holds);  // independent exact re-check
  }
}

TEST_CASE("prefilter can never drop a known identity") {
  for (const char* text : testutil::known_identities()) {
    CAPTURE(text);
    Identity id = from_text(text);
    double rhs = id.rhs.q.to_double() * std::sqrt(static_cast<double>(id.rhs.m));
    CHECK(std::abs(numeric_lhs(id) - rhs) < 1e-12);
  }
}

TEST_CASE("config validation") {
  DiscoveryConfig cfg = seven_config();
  cfg.denominators = {8};
  CHECK_THROWS_AS(discover(cfg), std::invalid_argument);
  cfg = seven_config();
  cfg.max_sin_terms = 5;
  CHECK_THROWS_AS(discover(cfg), std::invalid_argument);
  cfg = seven_config();
  cfg.surd_candidates = {12};
  CHECK_THROWS_AS(discover(cfg), std::invalid_argument);
}

TEST_CASE("residue_construct") {
  auto eleven = residue_construct(11);
  CHECK(contains(eleven, "tan(3pi/11) + 4 sin(2pi/11) = sqrt(11)"));

  auto seven = residue_construct(7);
  CHECK(contains(seven, "tan(2pi/7) + 4 sin(2pi/7) - 4 sin(pi/7) = sqrt(7)"));

  auto nineteen = residue_construct(19);
  CHECK(contains(nineteen,
                 "tan(4pi/19) + 4 sin(5pi/19) - 4 sin(6pi/19) + 4 sin(9pi/19) = sqrt(19)"));

  for (const auto& id : eleven) CHECK(verify(id).holds);

  CHECK_THROWS_AS(residue_construct(13), std::invalid_argument);  // 1 mod 4
  CHECK_THROWS_AS(residue_construct(15), std::invalid_argument);  // composite
}
