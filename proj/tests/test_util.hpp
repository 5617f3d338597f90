#ifndef CYCLOTRIG_TEST_UTIL_HPP
#define CYCLOTRIG_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "cyclotrig/cyclotomic.hpp"
#include "cyclotrig/verify.hpp"

namespace cyclotrig::testutil {

inline Rational random_rational(std::mt19937& rng, long max_abs = 9) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_abs);
  return Rational(num(rng), den(rng));
}

inline CycloElem random_elem(std::mt19937& rng, unsigned order) {
  CycloPoly p;
  std::uniform_int_distribution<unsigned> deg(0, euler_phi(order) - 1);
  for (int t = 0; t < 4; ++t)
    p = p + CycloPoly::monomial(deg(rng), random_rational(rng));
  return canonicalize(p, order);
}

// Every identity stated in the source material, as parseable text.
inline std::vector<const char*> known_identities() {
  return {
      // denominator 11 family
      "tan(pi/11) + 4 sin(3pi/11) = sqrt(11)",
      "tan(2pi/11) - 4 sin(5pi/11) = -sqrt(11)",
      "tan(3pi/11) + 4 sin(2pi/11) = sqrt(11)",
      "tan(4pi/11) + 4 sin(pi/11) = sqrt(11)",
      "tan(5pi/11) - 4 sin(4pi/11) = sqrt(11)",
      // denominator 9 family
      "tan(pi/9) + 4 sin(pi/9) = sqrt(3)",
      "tan(2pi/9) - 4 sin(2pi/9) = -sqrt(3)",
      "tan(4pi/9) - 4 sin(4pi/9) = sqrt(3)",
      "tan(6pi/9) + 4 sin(6pi/9) = sqrt(3)",
      // denominator 7 family
      "tan(pi/7) - 4 sin(2pi/7) = -sqrt(7)",
      "tan(2pi/7) - 4 sin(3pi/7) = -sqrt(7)",
      "tan(3pi/7) - 4 sin(pi/7) = sqrt(7)",
      // multi-sin closers
      "tan(2pi/7) + 4 sin(2pi/7) - 4 sin(pi/7) = sqrt(7)",
      "tan(4pi/19) + 4 sin(5pi/19) - 4 sin(6pi/19) + 4 sin(9pi/19) = sqrt(19)",
      "tan(pi/9) + 2 sin(pi/9) - 2 sin(2pi/9) + 2 sin(4pi/9) = sqrt(3)",
  };
}

}  // namespace cyclotrig::testutil

#endif
