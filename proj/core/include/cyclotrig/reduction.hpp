#ifndef CYCLOTRIG_REDUCTION_HPP
#define CYCLOTRIG_REDUCTION_HPP

#include <string>
#include <vector>

#include "cyclotrig/rational.hpp"
#include "cyclotrig/verify.hpp"

namespace cyclotrig {

// constant = sum coeff * cos(alpha*a + beta*b), the squared form of the
// equation tan a + B sin b = C.
struct CosineRelation {
  struct Term {
    Rational coeff;
    int alpha = 0;
    int beta = 0;
  };
  Rational constant;
  std::vector<Term> terms;

  // Right-hand side minus constant at concrete angles; zero when the
  // relation holds.
  double residual(double a, double b) const;
};

// Coefficients obtained by squaring sin a + B cos a sin b = C cos a and
// expanding products into cosines of combined angles.
CosineRelation square_reduce(const Rational& B, const Rational& C2);

// sum_{k=0}^{n-1} cos(x + k y); closed form when sin(y/2) != 0, direct
// limit value n cos(x) otherwise.
double cos_ap_sum(double x, double y, unsigned n);

struct IdentityFamily {
  struct Parameter {
    int k = 0;
    long a_num = 0;  // tan angle multiple of pi/n
    long b_num = 0;  // sin angle multiple of pi/n
    Sign sign = Sign::None;
  };
  std::string description;
  std::vector<Identity> members;  // deduplicated, normalized, each verified
  std::vector<Parameter> parameterization;
};

// tan(3k pi/11) + 4 sin(2k pi/11) = +-sqrt(11), k = 1..10, signs resolved
// exactly; the five reduced identities plus the full sign table.
IdentityFamily family_eleven();

// tan(a) + 4 sin(a) = +-sqrt(3) at a = k pi/9, k in {1, 5, 6, 7, 11, 12}.
IdentityFamily family_nine();

}  // namespace cyclotrig

#endif
