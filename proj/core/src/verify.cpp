#include "cyclotrig/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cyclotrig {

namespace {

void check_identity(const Identity& id) {
  for (const auto& t : id.lhs) {
    if (t.angle_den == 0 || t.angle_den % 2 == 0)
      throw std::invalid_argument("even angle denominator unsupported");
  }
  if (id.rhs.m % 2 == 0 || !is_squarefree(id.rhs.m))
    throw std::invalid_argument("unsupported surd on the right-hand side");
}

}  // namespace

VerifyResult verify(const Identity& id) {
  check_identity(id);
  unsigned L = 4;
  for (const auto& t : id.lhs) L = lcm_u(L, t.angle_den);
  L = lcm_u(L, id.rhs.m);

  const CycloElem i_unit = CycloElem::root_power(L, L / 4);
  CycloElem i_lhs = CycloElem::zero(L);
  for (const auto& raw : id.lhs) {
    TrigTerm t = canonicalize_term(raw);
    if (t.coeff.is_zero()) continue;
    switch (t.kind) {
      case TrigKind::Tan:
        i_lhs = i_lhs + t.coeff * i_tan_embed(t.angle_num, t.angle_den).embed(L);
        break;
      case TrigKind::Sin:
        i_lhs = i_lhs + t.coeff * i_sin_embed(t.angle_num, t.angle_den).embed(L);
        break;
      case TrigKind::Cos:
        i_lhs =
            i_lhs + t.coeff * (i_unit * cos_embed(t.angle_num, t.angle_den).embed(L));
        break;
    }
  }
  if (!id.lhs_constant.is_zero())
    i_lhs = i_lhs + id.lhs_constant * i_unit;

  CycloElem i_rhs = id.rhs.q * (i_unit * sqrt_embed(id.rhs.m).embed(L));
  CycloElem residual = i_lhs - i_rhs;

  VerifyResult res;
  res.holds = residual.is_zero();
  res.field_order = L;
  res.numeric_residual = std::abs(residual.eval_numeric());
  res.residual = std::move(residual);
  return res;
}

std::string sign_str(Sign s) {
  switch (s) {
    case Sign::Plus: return "+";
    case Sign::Minus: return "-";
    default: return "none";
  }
}

Sign resolve_sign(const std::vector<TrigTerm>& lhs, const Rational& q_abs,
                  unsigned m) {
  Identity plus{lhs, 0, {q_abs, m}};
  if (verify(plus).holds) return Sign::Plus;
  Identity minus{lhs, 0, {-q_abs, m}};
  if (verify(minus).holds) return Sign::Minus;
  return Sign::None;
}

Identity normalize_identity(Identity id) {
  // Angle value as a rational multiple of pi for ordering and merging.
  auto angle = [](const TrigTerm& t) {
    return Rational(t.angle_num, static_cast<long>(t.angle_den));
  };

  std::vector<TrigTerm> terms;
  for (const auto& raw : id.lhs) {
    TrigTerm t = canonicalize_term(raw);
    if (t.coeff.is_zero()) continue;
    const long n = static_cast<long>(t.angle_den);
    if (t.kind == TrigKind::Sin) {
      if (t.angle_num > n) {  // sin(t) = -sin(t - pi)
        t.angle_num -= n;
        t.coeff = -t.coeff;
      }
      if (2 * t.angle_num > n)  // supplement
        t.angle_num = n - t.angle_num;
    } else if (t.kind == TrigKind::Cos) {
      if (t.angle_num > n)  // cos(t) = cos(2pi - t)
        t.angle_num = 2 * n - t.angle_num;
      if (2 * t.angle_num > n) {  // cos(t) = -cos(pi - t)
        t.angle_num = n - t.angle_num;
        t.coeff = -t.coeff;
      }
    }
    terms.push_back(t);
  }

  // Merge coincident angles.
  std::map<std::pair<int, Rational>, size_t> slot;
  std::vector<TrigTerm> merged;
  for (const auto& t : terms) {
    auto key = std::make_pair(static_cast<int>(t.kind), angle(t));
    auto it = slot.find(key);
    if (it == slot.end()) {
      slot.emplace(key, merged.size());
      merged.push_back(t);
    } else {
      merged[it->second].coeff += t.coeff;
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const TrigTerm& t) { return t.coeff.is_zero(); }),
               merged.end());

  std::sort(merged.begin(), merged.end(), [&](const TrigTerm& a, const TrigTerm& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return angle(a) < angle(b);
  });

  // Normalize a lone tan term to coefficient +1 (A = 1) and to an angle
  // below pi/2 via tan(pi - t) = -tan(t).
  size_t tan_count = 0, tan_at = 0;
  for (size_t k = 0; k < merged.size(); ++k) {
    if (merged[k].kind == TrigKind::Tan) {
      ++tan_count;
      tan_at = k;
    }
  }
  if (tan_count == 1) {
    Rational scale = Rational(1) / merged[tan_at].coeff;
    for (auto& t : merged) t.coeff *= scale;
    id.lhs_constant *= scale;
    id.rhs.q *= scale;
    TrigTerm& tt = merged[tan_at];
    const long n = static_cast<long>(tt.angle_den);
    if (2 * tt.angle_num > n) {
      // tan(a) = -tan(pi - a); rewrite the angle, then negate the whole
      // identity so the tan coefficient is +1 again. The two sign flips
      // cancel on the tan term itself.
      tt.angle_num = n - tt.angle_num;
      for (size_t k = 0; k < merged.size(); ++k)
        if (k != tan_at) merged[k].coeff = -merged[k].coeff;
      id.lhs_constant = -id.lhs_constant;
      id.rhs.q = -id.rhs.q;
    }
  }

  id.lhs = std::move(merged);
  return id;
}

double numeric_lhs(const Identity& id) {
  double v = id.lhs_constant.to_double();
  for (const auto& t : id.lhs) v += term_numeric(t);
  return v;
}

std::string render_surd(const SurdTarget& s) {
  if (s.m == 1 || s.q.is_zero()) return s.q.str();
  std::ostringstream os;
  if (s.q == Rational(-1))
    os << "-";
  else if (s.q != Rational(1))
    os << s.q.str() << " ";
  os << "sqrt(" << s.m << ")";
  return os.str();
}

std::string render(const Identity& id) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : id.lhs) {
    TrigTerm u = t;
    if (!first) {
      os << (u.coeff.sign() < 0 ? " - " : " + ");
      if (u.coeff.sign() < 0) u.coeff = -u.coeff;
    }
    os << render_term(u);
    first = false;
  }
  if (!id.lhs_constant.is_zero() || first) {
    if (!first)
      os << (id.lhs_constant.sign() < 0 ? " - " : " + ")
         << abs(id.lhs_constant).str();
    else
      os << id.lhs_constant.str();
  }
  os << " = " << render_surd(id.rhs);
  return os.str();
}

bool same_identity(const Identity& a, const Identity& b) {
  Identity na = normalize_identity(a), nb = normalize_identity(b);
  return render(na) == render(nb);
}

}  // namespace cyclotrig
