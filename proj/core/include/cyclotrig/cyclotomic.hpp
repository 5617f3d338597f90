#ifndef CYCLOTRIG_CYCLOTOMIC_HPP
#define CYCLOTRIG_CYCLOTOMIC_HPP

#include <complex>
#include <utility>
#include <vector>

#include "cyclotrig/rational.hpp"

namespace cyclotrig {

unsigned euler_phi(unsigned n);
unsigned gcd_u(unsigned a, unsigned b);
unsigned lcm_u(unsigned a, unsigned b);

// Dense univariate polynomial over Q, ascending degree, no trailing zeros.
// Scratch representation before reduction modulo a cyclotomic polynomial.
class CycloPoly {
 public:
  CycloPoly() = default;
  explicit CycloPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static CycloPoly one() { return monomial(0, 1); }
  static CycloPoly monomial(unsigned degree, Rational coeff);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(unsigned k) const {
    return k < c_.size() ? c_[k] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  CycloPoly operator+(const CycloPoly& o) const;
  CycloPoly operator-(const CycloPoly& o) const;
  CycloPoly operator*(const CycloPoly& o) const;
  CycloPoly operator-() const;
  friend bool operator==(const CycloPoly& a, const CycloPoly& b) {
    return a.c_ == b.c_;
  }

  // Division with remainder; divisor must be nonzero.
  static std::pair<CycloPoly, CycloPoly> divmod(const CycloPoly& a,
                                                const CycloPoly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Phi_n, computed once by iterated exact division of x^n - 1 and cached.
// The cache is filled under a lock and entries are immutable afterwards.
const CycloPoly& cyclotomic_polynomial(unsigned n);

// An element of Q(zeta_n): the canonical residue mod Phi_n, stored as
// phi(n) rational coefficients of zeta_n^k, k = 0..phi(n)-1. Structural
// equality of (order, coeffs) is field equality.
class CycloElem {
 public:
  static CycloElem zero(unsigned order);
  static CycloElem one(unsigned order) { return from_rational(order, 1); }
  static CycloElem from_rational(unsigned order, Rational q);
  // zeta_n^k (k taken mod n).
  static CycloElem root_power(unsigned order, long k);
  static CycloElem from_poly(const CycloPoly& p, unsigned order);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  // The value as a rational if the element lies in Q, else nullopt-like
  // behaviour via the bool.
  bool is_rational(Rational* out = nullptr) const;

  CycloElem operator+(const CycloElem& o) const;
  CycloElem operator-(const CycloElem& o) const;
  CycloElem operator*(const CycloElem& o) const;
  CycloElem operator-() const;
  CycloElem scaled(const Rational& q) const;
  friend CycloElem operator*(const Rational& q, const CycloElem& u) {
    return u.scaled(q);
  }

  // Multiplicative inverse; throws std::domain_error on zero.
  CycloElem inverse() const;
  // The automorphism zeta_n -> zeta_n^{-1} (complex conjugation).
  CycloElem conj() const;
  // Ring homomorphism into Q(zeta_N); requires order() | N.
  CycloElem embed(unsigned N) const;

  // zeta_n = cos(2pi/n) + i sin(2pi/n) substituted in long double,
  // compensated summation. A prefilter, never a proof.
  std::complex<double> eval_numeric() const;

  // Elements of different orders are compared after embedding into the
  // common field Q(zeta_lcm).
  friend bool operator==(const CycloElem& a, const CycloElem& b);
  friend bool operator!=(const CycloElem& a, const CycloElem& b) {
    return !(a == b);
  }

  // Representative polynomial (degree < phi(order)).
  CycloPoly to_poly() const { return CycloPoly(coeffs_); }
  std::string str() const;

 private:
  CycloElem(unsigned order, std::vector<Rational> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}
  void require_same_order(const CycloElem& o) const;

  unsigned order_;
  std::vector<Rational> coeffs_;
};

inline CycloElem canonicalize(const CycloPoly& p, unsigned n) {
  return CycloElem::from_poly(p, n);
}

}  // namespace cyclotrig

#endif
