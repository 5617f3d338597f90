#ifndef CYCLOTRIG_TRIG_HPP
#define CYCLOTRIG_TRIG_HPP

#include <string>

#include "cyclotrig/cyclotomic.hpp"
#include "cyclotrig/rational.hpp"

namespace cyclotrig {

enum class TrigKind { Tan, Sin, Cos };

// coeff * kind(a*pi/n). The fraction a/n is deliberately not reduced;
// angle equality is decided by cross-multiplication.
struct TrigTerm {
  Rational coeff;
  TrigKind kind = TrigKind::Tan;
  long angle_num = 0;    // a
  unsigned angle_den = 1;  // n

  friend bool operator==(const TrigTerm& s, const TrigTerm& t) {
    return s.coeff == t.coeff && s.kind == t.kind &&
           s.angle_num * static_cast<long>(t.angle_den) ==
               t.angle_num * static_cast<long>(s.angle_den);
  }
};

// Reduces the angle into the canonical range: tan mod pi into [0, n),
// sin/cos mod 2pi into [0, 2n). Zero-valued terms come back with coeff 0.
// Throws std::domain_error for a tangent pole.
TrigTerm canonicalize_term(TrigTerm t);

// The exact value of the term as an element of Q(zeta_n); tan and sin are
// multiplied by i so everything stays in the cyclotomic field. n must be odd.
CycloElem i_tan_embed(long a, unsigned n);   // (x^a - 1)/(x^a + 1)
CycloElem i_sin_embed(long a, unsigned n);   // (x^m - x^{n-m})/2
CycloElem cos_embed(long a, unsigned n);     // real element

double term_numeric(const TrigTerm& t);
std::string render_term(const TrigTerm& t);

}  // namespace cyclotrig

#endif
