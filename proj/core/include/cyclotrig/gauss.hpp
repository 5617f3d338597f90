#ifndef CYCLOTRIG_GAUSS_HPP
#define CYCLOTRIG_GAUSS_HPP

#include <string>
#include <vector>

#include "cyclotrig/cyclotomic.hpp"
#include "cyclotrig/rational.hpp"

namespace cyclotrig {

// The right-hand side q * sqrt(m), m squarefree. A plain rational is
// represented as m = 1.
struct SurdTarget {
  Rational q;
  unsigned m = 1;
};

enum class GaussClass { OnePlusISqrtN, SqrtN, Zero, ISqrtN };

GaussClass gauss_class(unsigned n);  // by n mod 4
std::string gauss_class_str(GaussClass c);

struct GaussValue {
  unsigned n;
  CycloElem sum;           // over Q(zeta_n)
  GaussClass closed_class;
};

bool is_squarefree(unsigned m);

// Direct summation sum_j x^{j^2 mod n} in Q(zeta_n).
CycloElem gauss_sum(unsigned n);

// The classified closed-form value as an exact element of Q(zeta_{lcm(4,n)}).
CycloElem gauss_closed_form(unsigned n);

GaussValue gauss_value(unsigned n);

// Nonzero squares mod n, ascending.
std::vector<unsigned> quadratic_residues(unsigned n);

// sqrt(m) for odd squarefree m, built from the Gauss sum G_m, as a real
// positive element of Q(zeta_{4m}). Throws for even or non-squarefree m.
CycloElem sqrt_embed(unsigned m);

// sqrt(k) for any positive integer, square part stripped first, as an
// element of Q(zeta_{target_order}); the target must be divisible by the
// orders the surd factors need.
CycloElem sqrt_positive_integer(unsigned k, unsigned target_order);

// Splits k = s^2 * f with f squarefree.
std::pair<unsigned, unsigned> strip_square_part(unsigned k);

}  // namespace cyclotrig

#endif
