#include "cyclotrig/gauss.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace cyclotrig {

GaussClass gauss_class(unsigned n) {
  switch (n % 4) {
    case 0: return GaussClass::OnePlusISqrtN;
    case 1: return GaussClass::SqrtN;
    case 2: return GaussClass::Zero;
    default: return GaussClass::ISqrtN;
  }
}

std::string gauss_class_str(GaussClass c) {
  switch (c) {
    case GaussClass::OnePlusISqrtN: return "(1+i)sqrt(n)";
    case GaussClass::SqrtN: return "sqrt(n)";
    case GaussClass::Zero: return "0";
    case GaussClass::ISqrtN: return "i sqrt(n)";
  }
  return "?";
}

bool is_squarefree(unsigned m) {
  if (m == 0) return false;
  for (unsigned p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> strip_square_part(unsigned k) {
  unsigned s = 1, f = 1;
  for (unsigned p = 2; p * p <= k; ++p) {
    unsigned e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2 == 1) f *= p;
  }
  f *= k;  // leftover prime
  return {s, f};
}

CycloElem gauss_sum(unsigned n) {
  if (n == 0) throw std::invalid_argument("gauss_sum(0)");
  CycloPoly p;
  for (unsigned j = 0; j < n; ++j) {
    unsigned e = static_cast<unsigned>((static_cast<unsigned long>(j) * j) % n);
    p = p + CycloPoly::monomial(e, 1);
  }
  return canonicalize(p, n);
}

CycloElem sqrt_embed(unsigned m) {
  if (m == 0 || m % 2 == 0)
    throw std::invalid_argument("unsupported surd: even radicand");
  if (!is_squarefree(m))
    throw std::invalid_argument("unsupported surd: radicand not squarefree");
  const unsigned order = 4 * m;
  if (m == 1) return CycloElem::one(order);
  CycloElem g = gauss_sum(m).embed(order);
  if (m % 4 == 1) return g;
  // m = 3 mod 4: G_m = i sqrt(m), so sqrt(m) = -i G_m with i = zeta_{4m}^m.
  CycloElem minus_i = -CycloElem::root_power(order, m);
  return minus_i * g;
}

CycloElem sqrt_positive_integer(unsigned k, unsigned target_order) {
  if (k == 0) throw std::invalid_argument("sqrt of zero not a surd");
  auto [s, f] = strip_square_part(k);
  CycloElem v = CycloElem::from_rational(target_order, Rational(long(s)));
  unsigned f_odd = f;
  if (f % 2 == 0) {
    f_odd = f / 2;
    if (target_order % 8 != 0)
      throw std::invalid_argument("sqrt(2) needs zeta_8 in the target field");
    // sqrt(2) = zeta_8 + zeta_8^{-1}
    CycloElem r2 = CycloElem::root_power(8, 1) + CycloElem::root_power(8, -1);
    v = v * r2.embed(target_order);
  }
  if (f_odd > 1) {
    if (target_order % (4 * f_odd) != 0)
      throw std::invalid_argument("surd does not fit the target field");
    v = v * sqrt_embed(f_odd).embed(target_order);
  }
  return v;
}

CycloElem gauss_closed_form(unsigned n) {
  if (n == 0) throw std::invalid_argument("gauss_closed_form(0)");
  const unsigned L = lcm_u(4, n);
  switch (gauss_class(n)) {
    case GaussClass::Zero:
      return CycloElem::zero(L);
    case GaussClass::SqrtN:
      return sqrt_positive_integer(n, L);
    case GaussClass::ISqrtN:
      return CycloElem::root_power(L, L / 4) * sqrt_positive_integer(n, L);
    case GaussClass::OnePlusISqrtN: {
      CycloElem one_plus_i =
          CycloElem::one(L) + CycloElem::root_power(L, L / 4);
      return one_plus_i * sqrt_positive_integer(n, L);
    }
  }
  throw std::logic_error("unreachable");
}

GaussValue gauss_value(unsigned n) {
  return GaussValue{n, gauss_sum(n), gauss_class(n)};
}

std::vector<unsigned> quadratic_residues(unsigned n) {
  if (n < 2) throw std::invalid_argument("quadratic_residues needs n >= 2");
  std::set<unsigned> rs;
  for (unsigned j = 1; j < n; ++j) {
    unsigned r = static_cast<unsigned>((static_cast<unsigned long>(j) * j) % n);
    if (r != 0) rs.insert(r);
  }
  return {rs.begin(), rs.end()};
}

}  // namespace cyclotrig
