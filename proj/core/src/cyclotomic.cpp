#include "cyclotrig/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclotrig {

unsigned gcd_u(unsigned a, unsigned b) { return std::gcd(a, b); }
unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CycloPoly CycloPoly::monomial(unsigned degree, Rational coeff) {
  if (coeff.is_zero()) return CycloPoly();
  std::vector<Rational> c(degree + 1);
  c[degree] = std::move(coeff);
  return CycloPoly(std::move(c));
}

void CycloPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycloPoly CycloPoly::operator+(const CycloPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
  return CycloPoly(std::move(c));
}

CycloPoly CycloPoly::operator-(const CycloPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) - o.coeff(k);
  return CycloPoly(std::move(c));
}

CycloPoly CycloPoly::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = -c_[k];
  return CycloPoly(std::move(c));
}

CycloPoly CycloPoly::operator*(const CycloPoly& o) const {
  if (is_zero() || o.is_zero()) return CycloPoly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      c[i + j] += c_[i] * o.c_[j];
    }
  }
  return CycloPoly(std::move(c));
}

std::pair<CycloPoly, CycloPoly> CycloPoly::divmod(const CycloPoly& a,
                                                  const CycloPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {CycloPoly(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quot(a.degree() - b.degree() + 1);
  const Rational lead = b.c_.back();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational q = rem[k + b.degree()] / lead;
    if (q.is_zero()) continue;
    quot[k] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.c_[j];
  }
  return {CycloPoly(std::move(quot)), CycloPoly(std::move(rem))};
}

namespace {

CycloPoly x_pow_n_minus_1(unsigned n) {
  std::vector<Rational> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  return CycloPoly(std::move(c));
}

CycloPoly compute_cyclotomic(unsigned n) {
  if (n == 1) return CycloPoly({Rational(-1), Rational(1)});
  CycloPoly p = x_pow_n_minus_1(n);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = CycloPoly::divmod(p, cyclotomic_polynomial(d));
    if (!r.is_zero())
      throw std::logic_error("cyclotomic division left a remainder");
    p = std::move(q);
  }
  return p;
}

}  // namespace

const CycloPoly& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
  static std::map<unsigned, CycloPoly> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, compute_cyclotomic(n)).first;
  return it->second;
}

CycloElem CycloElem::zero(unsigned order) {
  if (order == 0) throw std::invalid_argument("order must be positive");
  return CycloElem(order, std::vector<Rational>(euler_phi(order)));
}

CycloElem CycloElem::from_rational(unsigned order, Rational q) {
  return from_poly(CycloPoly::monomial(0, std::move(q)), order);
}

CycloElem CycloElem::root_power(unsigned order, long k) {
  long r = k % static_cast<long>(order);
  if (r < 0) r += order;
  return from_poly(CycloPoly::monomial(static_cast<unsigned>(r), 1), order);
}

CycloElem CycloElem::from_poly(const CycloPoly& p, unsigned order) {
  if (order == 0) throw std::invalid_argument("order must be positive");
  const CycloPoly& phi = cyclotomic_polynomial(order);
  CycloPoly r = p;
  if (r.degree() >= phi.degree()) r = CycloPoly::divmod(r, phi).second;
  std::vector<Rational> c(euler_phi(order));
  for (size_t k = 0; k < c.size(); ++k) c[k] = r.coeff(k);
  return CycloElem(order, std::move(c));
}

bool CycloElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycloElem::is_rational(Rational* out) const {
  for (size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return false;
  if (out) *out = coeffs_[0];
  return true;
}

void CycloElem::require_same_order(const CycloElem& o) const {
  if (order_ != o.order_)
    throw std::invalid_argument("cyclotomic order mismatch; embed first");
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
  require_same_order(o);
  std::vector<Rational> c(coeffs_.size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = coeffs_[k] + o.coeffs_[k];
  return CycloElem(order_, std::move(c));
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
  require_same_order(o);
  std::vector<Rational> c(coeffs_.size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = coeffs_[k] - o.coeffs_[k];
  return CycloElem(order_, std::move(c));
}

CycloElem CycloElem::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = -coeffs_[k];
  return CycloElem(order_, std::move(c));
}

CycloElem CycloElem::scaled(const Rational& q) const {
  std::vector<Rational> c(coeffs_.size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = q * coeffs_[k];
  return CycloElem(order_, std::move(c));
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
  require_same_order(o);
  return from_poly(to_poly() * o.to_poly(), order_);
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic element");
  // Extended gcd of the representative with Phi_n over Q. Phi_n is
  // irreducible, so the gcd is a nonzero constant.
  CycloPoly r0 = cyclotomic_polynomial(order_);
  CycloPoly r1 = to_poly();
  CycloPoly s0;           // coefficient of *this in r0
  CycloPoly s1 = CycloPoly::one();
  while (!r1.is_zero()) {
    auto [q, r2] = CycloPoly::divmod(r0, r1);
    CycloPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0)
    throw std::logic_error("nonconstant gcd with cyclotomic polynomial");
  return from_poly(s0 * CycloPoly::monomial(0, Rational(1) / r0.coeff(0)),
                   order_);
}

CycloElem CycloElem::conj() const {
  CycloPoly p;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    unsigned e = k == 0 ? 0 : order_ - static_cast<unsigned>(k);
    p = p + CycloPoly::monomial(e, coeffs_[k]);
  }
  return from_poly(p, order_);
}

CycloElem CycloElem::embed(unsigned N) const {
  if (N == 0 || N % order_ != 0)
    throw std::invalid_argument("embed target order not a multiple");
  if (N == order_) return *this;
  const unsigned step = N / order_;
  CycloPoly p;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    p = p + CycloPoly::monomial(static_cast<unsigned>(k) * step, coeffs_[k]);
  }
  return from_poly(p, N);
}

std::complex<double> CycloElem::eval_numeric() const {
  const long double two_pi = 6.283185307179586476925286766559005768L;
  long double re = 0, im = 0, cre = 0, cim = 0;  // Kahan compensation
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    long double c = coeffs_[k].to_long_double();
    long double theta = two_pi * static_cast<long double>(k) / order_;
    long double tr = c * std::cos(theta) - cre;
    long double t = re + tr;
    cre = (t - re) - tr;
    re = t;
    long double ti = c * std::sin(theta) - cim;
    t = im + ti;
    cim = (t - im) - ti;
    im = t;
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  unsigned L = lcm_u(a.order_, b.order_);
  return a.embed(L).coeffs_ == b.embed(L).coeffs_;
}

std::string CycloElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    Rational c = coeffs_[k];
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    if (k == 0) {
      os << c;
    } else {
      if (c != Rational(1)) os << c << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace cyclotrig
