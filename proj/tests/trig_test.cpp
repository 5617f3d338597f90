#include <doctest.h>

#include <cmath>
#include <complex>

#include "cyclotrig/trig.hpp"
#include "test_util.hpp"

using namespace cyclotrig;

namespace {

CycloElem elem11(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return canonicalize(CycloPoly(std::move(c)), 11);
}

}  // namespace

TEST_CASE("canonicalize_term") {
  TrigTerm t = canonicalize_term({Rational(1), TrigKind::Tan, 14, 11});
  CHECK(t.angle_num == 3);
  CHECK(t.coeff == Rational(1));

  t = canonicalize_term({Rational(4), TrigKind::Sin, 11, 11});
  CHECK(t.coeff.is_zero());

  CHECK_THROWS_AS(canonicalize_term({Rational(1), TrigKind::Tan, 1, 2}),
                  std::domain_error);
  CHECK_THROWS_AS(canonicalize_term({Rational(1), TrigKind::Tan, 3, 6}),
                  std::domain_error);

  t = canonicalize_term({Rational(2), TrigKind::Sin, -3, 11});
  CHECK(t.angle_num == 19);

  t = canonicalize_term({Rational(1), TrigKind::Cos, 1, 2});
  CHECK(t.coeff.is_zero());

  // idempotence
  for (long a = -30; a <= 30; ++a) {
    for (TrigKind k : {TrigKind::Tan, TrigKind::Sin, TrigKind::Cos}) {
      TrigTerm once = canonicalize_term({Rational(3), k, a, 11});
      CHECK(canonicalize_term(once) == once);
    }
  }
}

TEST_CASE("i_tan_embed") {
  // i tan(3pi/11) = -x - x^2 + x^3 + x^4 + x^5 - x^6 - x^7 - x^8 + x^9 + x^10
  CHECK(i_tan_embed(3, 11) ==
        elem11({0, -1, -1, 1, 1, 1, -1, -1, -1, 1, 1}));
  CHECK(i_tan_embed(0, 11).is_zero());
  CHECK(i_tan_embed(14, 11) == i_tan_embed(3, 11));
  CHECK_THROWS_AS(i_tan_embed(1, 4), std::invalid_argument);
}

TEST_CASE("i_sin_embed") {
  CHECK(i_sin_embed(2, 11) ==
        Rational(1, 2) * (CycloElem::root_power(11, 1) - CycloElem::root_power(11, 10)));
  CHECK(i_sin_embed(3, 11) ==
        Rational(1, 2) * (CycloElem::root_power(11, 4) - CycloElem::root_power(11, 7)));
  CHECK(i_sin_embed(0, 11).is_zero());
  CHECK_THROWS_AS(i_sin_embed(1, 6), std::invalid_argument);
}

TEST_CASE("cos_embed") {
  CHECK(cos_embed(0, 3) == CycloElem::one(3));
  CHECK(cos_embed(2, 3) == CycloElem::from_rational(3, Rational(-1, 2)));
  CHECK(cos_embed(1, 11) ==
        Rational(-1, 2) * (CycloElem::root_power(11, 5) + CycloElem::root_power(11, 6)));
}

TEST_CASE("numeric agreement across all odd denominators") {
  for (unsigned n = 3; n <= 51; n += 2) {
    for (long a = 0; a < static_cast<long>(2 * n); ++a) {
      double theta = M_PI * static_cast<double>(a) / n;
      std::complex<double> i(0, 1);
      if (a < static_cast<long>(n)) {
        CHECK(std::abs(i_tan_embed(a, n).eval_numeric() - i * std::tan(theta)) <
              1e-10);
      }
      CHECK(std::abs(i_sin_embed(a, n).eval_numeric() - i * std::sin(theta)) <
            1e-10);
      CHECK(std::abs(cos_embed(a, n).eval_numeric() -
                     std::complex<double>(std::cos(theta), 0)) < 1e-10);
    }
  }
}

TEST_CASE("odd symmetries are exact") {
  for (unsigned n : {3u, 9u, 11u, 19u}) {
    for (long a = 1; a < static_cast<long>(n); ++a) {
      CHECK((i_tan_embed(a, n) + i_tan_embed(static_cast<long>(n) - a, n)).is_zero());
      CHECK(i_sin_embed(2 * static_cast<long>(n) - a, n) == -i_sin_embed(a, n));
    }
  }
}
