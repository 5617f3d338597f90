#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cyclotrig/parse.hpp"
#include "cyclotrig/verify.hpp"
#include "test_util.hpp"

using namespace cyclotrig;

namespace {

Identity from_text(const std::string& s) {
  size_t eq = s.find('=');
  REQUIRE(eq != std::string::npos);
  return make_identity(lower(*parse(s.substr(0, eq))),
                       lower(*parse(s.substr(eq + 1))));
}

}  // namespace

TEST_CASE("headline identity holds") {
  VerifyResult res = verify(from_text("tan(3pi/11) + 4 sin(2pi/11) = sqrt(11)"));
  CHECK(res.holds);
  CHECK(res.field_order == 44);
  CHECK(res.residual.is_zero());
}

TEST_CASE("sign flip fails with nonzero residual") {
  VerifyResult res = verify(from_text("tan(3pi/11) + 4 sin(2pi/11) = -sqrt(11)"));
  CHECK_FALSE(res.holds);
  CHECK_FALSE(res.residual.is_zero());
  // residual is i * 2 sqrt(11); numerically 2 sqrt(11)
  CHECK(res.numeric_residual == doctest::Approx(2 * 3.3166247903554).epsilon(1e-9));
}

TEST_CASE("multi-sin identities hold") {
  CHECK(verify(from_text("tan(2pi/7) + 4 sin(2pi/7) - 4 sin(pi/7) = sqrt(7)")).holds);
  VerifyResult r19 = verify(from_text(
      "tan(4pi/19) + 4 sin(5pi/19) - 4 sin(6pi/19) + 4 sin(9pi/19) = sqrt(19)"));
  CHECK(r19.holds);
  CHECK(r19.field_order == 76);
}

TEST_CASE("all known identities verify exactly and numerically") {
  for (const char* text : testutil::known_identities()) {
    CAPTURE(text);
    Identity id = from_text(text);
    VerifyResult res = verify(id);
    CHECK(res.holds);
    CHECK(res.numeric_residual < 1e-12);
    // the double-precision soundness direction
    double rhs = id.rhs.q.to_double() * std::sqrt(static_cast<double>(id.rhs.m));
    CHECK(std::abs(numeric_lhs(id) - rhs) < 1e-9);
  }
}

TEST_CASE("verify is invariant under reordering and canonicalization") {
  std::mt19937 rng(5);
  for (const char* text : testutil::known_identities()) {
    Identity id = from_text(text);
    Identity shuffled = id;
    std::shuffle(shuffled.lhs.begin(), shuffled.lhs.end(), rng);
    for (auto& t : shuffled.lhs) t = canonicalize_term(t);
    CHECK(verify(shuffled).holds == verify(id).holds);
  }
}

TEST_CASE("verify is invariant under supplement rewriting of sin terms") {
  for (const char* text : testutil::known_identities()) {
    Identity id = from_text(text);
    Identity rewritten = id;
    for (auto& t : rewritten.lhs) {
      if (t.kind == TrigKind::Sin)
        t.angle_num = static_cast<long>(t.angle_den) - t.angle_num;
    }
    CHECK(verify(rewritten).holds == verify(id).holds);
  }
}

TEST_CASE("rational right-hand sides") {
  CHECK(verify(from_text("cos(2pi/3) = -1/2")).holds);
  CHECK(verify(from_text("sin(pi/3) - sin(2pi/3) = 0")).holds);
  CHECK_FALSE(verify(from_text("cos(2pi/3) = 1/2")).holds);
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(verify(from_text("sin(pi/4) = 1")), std::invalid_argument);
  CHECK_THROWS_AS(verify(from_text("tan(pi/3) = sqrt(18)")),
                  std::invalid_argument);  // even radicand survives stripping
}

TEST_CASE("resolve_sign") {
  std::vector<TrigTerm> k6{{Rational(1), TrigKind::Tan, 18, 11},
                           {Rational(4), TrigKind::Sin, 12, 11}};
  CHECK(resolve_sign(k6, 1, 11) == Sign::Minus);

  std::vector<TrigTerm> nine{{Rational(1), TrigKind::Tan, 1, 9},
                             {Rational(4), TrigKind::Sin, 1, 9}};
  CHECK(resolve_sign(nine, 1, 3) == Sign::Plus);

  std::vector<TrigTerm> lone{{Rational(1), TrigKind::Tan, 1, 11}};
  CHECK(resolve_sign(lone, 1, 11) == Sign::None);

  // both signs can never verify at once for q != 0
  for (const char* text : testutil::known_identities()) {
    Identity id = from_text(text);
    Identity flipped = id;
    flipped.rhs.q = -flipped.rhs.q;
    CHECK(verify(id).holds != verify(flipped).holds);
  }
}

TEST_CASE("normalize_identity merges and orders terms") {
  Identity id = from_text("2 sin(2pi/11) + tan(3pi/11) + 2 sin(2pi/11) = sqrt(11)");
  Identity norm = normalize_identity(id);
  CHECK(norm.lhs.size() == 2);
  CHECK(norm.lhs.front().kind == TrigKind::Tan);
  CHECK(norm.lhs.back().coeff == Rational(4));
  CHECK(same_identity(id, from_text("tan(3pi/11) + 4 sin(2pi/11) = sqrt(11)")));
}
