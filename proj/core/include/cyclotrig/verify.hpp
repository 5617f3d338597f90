#ifndef CYCLOTRIG_VERIFY_HPP
#define CYCLOTRIG_VERIFY_HPP

#include <string>
#include <vector>

#include "cyclotrig/gauss.hpp"
#include "cyclotrig/trig.hpp"

namespace cyclotrig {

// A claimed identity: sum of trig terms (plus an optional rational
// constant) equal to q * sqrt(m). All angle denominators must be odd and
// m odd squarefree or 1.
struct Identity {
  std::vector<TrigTerm> lhs;
  Rational lhs_constant;
  SurdTarget rhs;
};

struct VerifyResult {
  bool holds = false;
  unsigned field_order = 1;     // L, the order of the common field
  CycloElem residual = CycloElem::zero(1);
  double numeric_residual = 0;  // diagnostics only
};

// Exact check: embeds i*LHS and i*RHS into Q(zeta_L) with
// L = lcm(4, denominators, m) and tests the difference for zero.
VerifyResult verify(const Identity& id);

enum class Sign { Plus, Minus, None };
std::string sign_str(Sign s);

// The unique sign for which lhs = sign * q_abs * sqrt(m) verifies exactly.
Sign resolve_sign(const std::vector<TrigTerm>& lhs, const Rational& q_abs,
                  unsigned m);

// Canonical form used for comparison and deduplication: terms reduced to
// the smallest multiple of pi/n (sin/cos angles in (0, n/2]), equal angles
// merged, terms sorted; a single tan term is scaled to coefficient +1 and
// reflected into (0, n/2) by negating the whole identity if needed.
Identity normalize_identity(Identity id);

double numeric_lhs(const Identity& id);
std::string render(const Identity& id);
std::string render_surd(const SurdTarget& s);

bool same_identity(const Identity& a, const Identity& b);

}  // namespace cyclotrig

#endif
