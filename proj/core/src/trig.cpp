#include "cyclotrig/trig.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclotrig {

namespace {

long mod_pos(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

void require_odd(unsigned n) {
  if (n == 0 || n % 2 == 0)
    throw std::invalid_argument("angle denominator must be odd");
}

// For odd n, sin(a*pi/n) = (x^m - x^{-m}) / 2i with m integral: directly
// m = a/2 for even a, and via the supplement sin(pi - t) = sin t for odd a.
long half_exponent(long a, long n) { return a % 2 == 0 ? a / 2 : (n - a) / 2; }

}  // namespace

TrigTerm canonicalize_term(TrigTerm t) {
  if (t.angle_den < 1)
    throw std::invalid_argument("angle denominator must be positive");
  const long g = std::gcd(t.angle_num, static_cast<long>(t.angle_den));
  if (g > 1) {
    t.angle_num /= g;
    t.angle_den /= static_cast<unsigned>(g);
  }
  const long n = static_cast<long>(t.angle_den);
  if (t.kind == TrigKind::Tan) {
    t.angle_num = mod_pos(t.angle_num, n);
    if (2 * t.angle_num == n)
      throw std::domain_error("tangent undefined at pi/2");
    if (t.angle_num == 0) t.coeff = 0;
  } else {
    t.angle_num = mod_pos(t.angle_num, 2 * n);
    if (t.kind == TrigKind::Sin && t.angle_num % n == 0) t.coeff = 0;
    if (t.kind == TrigKind::Cos && mod_pos(2 * t.angle_num - n, 2 * n) == 0)
      t.coeff = 0;
  }
  if (t.coeff.is_zero()) {
    t.angle_num = 0;
    t.angle_den = 1;
  }
  return t;
}

CycloElem i_tan_embed(long a, unsigned n) {
  require_odd(n);
  a = mod_pos(a, n);
  if (a == 0) return CycloElem::zero(n);
  // x^a has odd order, so x^a + 1 never vanishes and tan has no pole here.
  CycloElem xa = CycloElem::root_power(n, a);
  CycloElem one = CycloElem::one(n);
  return (xa - one) * (xa + one).inverse();
}

CycloElem i_sin_embed(long a, unsigned n) {
  require_odd(n);
  const long m = half_exponent(a, n);
  CycloElem d = CycloElem::root_power(n, m) - CycloElem::root_power(n, -m);
  return d.scaled(Rational(1, 2));
}

CycloElem cos_embed(long a, unsigned n) {
  require_odd(n);
  const long m = half_exponent(a, n);
  CycloElem s = CycloElem::root_power(n, m) + CycloElem::root_power(n, -m);
  s = s.scaled(Rational(1, 2));
  // cos(pi - t) = -cos t picks up a sign on the odd branch.
  return mod_pos(a, 2) == 0 ? s : -s;
}

double term_numeric(const TrigTerm& t) {
  double theta = M_PI * static_cast<double>(t.angle_num) / t.angle_den;
  double v = 0;
  switch (t.kind) {
    case TrigKind::Tan: v = std::tan(theta); break;
    case TrigKind::Sin: v = std::sin(theta); break;
    case TrigKind::Cos: v = std::cos(theta); break;
  }
  return t.coeff.to_double() * v;
}

std::string render_term(const TrigTerm& t) {
  std::ostringstream os;
  if (t.coeff != Rational(1)) {
    if (t.coeff == Rational(-1))
      os << "-";
    else
      os << t.coeff.str() << " ";
  }
  switch (t.kind) {
    case TrigKind::Tan: os << "tan("; break;
    case TrigKind::Sin: os << "sin("; break;
    case TrigKind::Cos: os << "cos("; break;
  }
  if (t.angle_num == 0) {
    os << "0";
  } else {
    if (t.angle_num != 1) os << t.angle_num;
    os << "pi";
    if (t.angle_den != 1) os << "/" << t.angle_den;
  }
  os << ")";
  return os.str();
}

}  // namespace cyclotrig
