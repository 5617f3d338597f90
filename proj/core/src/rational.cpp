#include "cyclotrig/rational.hpp"

#include <ostream>

namespace cyclotrig {

Rational Rational::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational literal: " + s);
  if (v.get_den() == 0)
    throw std::domain_error("rational with zero denominator: " + s);
  v.canonicalize();
  return Rational(std::move(v));
}

long double Rational::to_long_double() const {
  // Exact long-double path when both parts fit in a machine word; this is
  // what keeps eval_numeric inside its error budget for large coefficients.
  if (v_.get_num().fits_slong_p() && v_.get_den().fits_slong_p()) {
    return static_cast<long double>(v_.get_num().get_si()) /
           static_cast<long double>(v_.get_den().get_si());
  }
  return v_.get_d();
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace cyclotrig
