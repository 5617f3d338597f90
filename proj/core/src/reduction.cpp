#include "cyclotrig/reduction.hpp"

#include <cmath>
#include <stdexcept>

namespace cyclotrig {

double CosineRelation::residual(double a, double b) const {
  double rhs = 0;
  for (const auto& t : terms)
    rhs += t.coeff.to_double() * std::cos(t.alpha * a + t.beta * b);
  return rhs - constant.to_double();
}

CosineRelation square_reduce(const Rational& B, const Rational& C2) {
  CosineRelation rel;
  rel.constant = (Rational(2) - 2 * C2 + B * B) * Rational(1, 4);
  auto push = [&rel](Rational c, int alpha, int beta) {
    if (!c.is_zero()) rel.terms.push_back({std::move(c), alpha, beta});
  };
  push((Rational(2) + 2 * C2 - B * B) * Rational(1, 4), 2, 0);
  push(B * B * Rational(1, 8), 2, 2);
  push(B * B * Rational(1, 8), 2, -2);
  push(B * Rational(1, 2), 2, 1);
  push(-B * Rational(1, 2), 2, -1);
  push(B * B * Rational(1, 4), 0, 2);
  return rel;
}

double cos_ap_sum(double x, double y, unsigned n) {
  const double s = std::sin(y / 2);
  if (s == 0.0) return n * std::cos(x);
  return std::cos(x + (n - 1) * y / 2) * std::sin(n * y / 2) / s;
}

namespace {

Identity family_member(long a_num, long b_num, unsigned n, Sign sign,
                       unsigned m) {
  std::vector<TrigTerm> lhs{{Rational(1), TrigKind::Tan, a_num, n},
                            {Rational(4), TrigKind::Sin, b_num, n}};
  Rational q = sign == Sign::Plus ? 1 : -1;
  return Identity{std::move(lhs), 0, {q, m}};
}

void add_member(IdentityFamily& fam, const Identity& id) {
  Identity norm = normalize_identity(id);
  for (const auto& existing : fam.members)
    if (render(existing) == render(norm)) return;
  fam.members.push_back(std::move(norm));
}

}  // namespace

IdentityFamily family_eleven() {
  IdentityFamily fam;
  fam.description = "tan(3k pi/11) + 4 sin(2k pi/11) = +-sqrt(11)";
  for (int k = 1; k <= 10; ++k) {  // k = 0 mod 11 excluded
    std::vector<TrigTerm> lhs{{Rational(1), TrigKind::Tan, 3L * k, 11},
                              {Rational(4), TrigKind::Sin, 2L * k, 11}};
    Sign s = resolve_sign(lhs, 1, 11);
    if (s == Sign::None)
      throw std::logic_error("family_eleven member failed both signs");
    fam.parameterization.push_back({k, 3L * k, 2L * k, s});
    add_member(fam, family_member(3L * k, 2L * k, 11, s, 11));
  }
  return fam;
}

IdentityFamily family_nine() {
  IdentityFamily fam;
  fam.description = "tan(k pi/9) + 4 sin(k pi/9) = +-sqrt(3)";
  for (int k : {1, 5, 6, 7, 11, 12}) {
    // tan is defined at every k pi/9 in this set (none reduce to pi/2).
    std::vector<TrigTerm> lhs{{Rational(1), TrigKind::Tan, k, 9},
                              {Rational(4), TrigKind::Sin, k, 9}};
    Sign s = resolve_sign(lhs, 1, 3);
    if (s == Sign::None)
      throw std::logic_error("family_nine member failed both signs");
    fam.parameterization.push_back({k, k, k, s});
    add_member(fam, family_member(k, k, 9, s, 3));
  }
  return fam;
}

}  // namespace cyclotrig
