#include "cyclotrig/parse.hpp"

#include <cctype>
#include <cmath>

#include "cyclotrig/gauss.hpp"

namespace cyclotrig {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Slash, LParen, RParen, End };
  Kind kind;
  size_t pos;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Number, i, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Ident, i, s.substr(i, j - i)});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::Plus; break;
      case '-': k = Token::Kind::Minus; break;
      case '*': k = Token::Kind::Star; break;
      case '/': k = Token::Kind::Slash; break;
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      default:
        throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, i, s.substr(i, 1)});
    ++i;
  }
  out.push_back({Token::Kind::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != Token::Kind::End)
      throw ParseError(peek().pos, "unexpected trailing input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }

  static ExprPtr node(ExprNode::Kind k, ExprPtr a = nullptr, ExprPtr b = nullptr) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      bool plus = take().kind == Token::Kind::Plus;
      e = node(plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub, std::move(e),
               term());
    }
    return e;
  }

  bool starts_factor() const {
    switch (peek().kind) {
      case Token::Kind::Number:
      case Token::Kind::Ident:
      case Token::Kind::LParen:
        return true;
      default:
        return false;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      if (peek().kind == Token::Kind::Star) {
        take();
        e = node(ExprNode::Kind::Mul, std::move(e), factor());
      } else if (peek().kind == Token::Kind::Slash) {
        take();
        e = node(ExprNode::Kind::Div, std::move(e), factor());
      } else if (starts_factor()) {  // implicit multiplication
        e = node(ExprNode::Kind::Mul, std::move(e), factor());
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    const Token t = take();
    switch (t.kind) {
      case Token::Kind::Number: {
        auto n = node(ExprNode::Kind::Number);
        n->value = Rational::from_string(t.text);
        return n;
      }
      case Token::Kind::Minus:
        return node(ExprNode::Kind::Negate, factor());
      case Token::Kind::LParen: {
        ExprPtr e = expr();
        expect_rparen();
        return e;
      }
      case Token::Kind::Ident: {
        if (t.text == "pi") return node(ExprNode::Kind::Pi);
        ExprNode::Kind k;
        if (t.text == "sin") k = ExprNode::Kind::Sin;
        else if (t.text == "cos") k = ExprNode::Kind::Cos;
        else if (t.text == "tan") k = ExprNode::Kind::Tan;
        else if (t.text == "sqrt") k = ExprNode::Kind::Sqrt;
        else throw ParseError(t.pos, "unknown name '" + t.text + "'");
        if (peek().kind != Token::Kind::LParen)
          throw ParseError(peek().pos, "expected '(' after " + t.text);
        take();
        ExprPtr arg = expr();
        expect_rparen();
        return node(k, std::move(arg));
      }
      default:
        throw ParseError(t.pos, t.kind == Token::Kind::End
                                    ? "unexpected end of input"
                                    : "unexpected token '" + t.text + "'");
    }
  }

  void expect_rparen() {
    const Token& t = peek();
    if (t.kind != Token::Kind::RParen)
      throw ParseError(t.pos, t.kind == Token::Kind::End
                                  ? "missing ')' at end of input"
                                  : "expected ')'");
    take();
  }

  std::vector<Token> toks_;
  size_t at_ = 0;
};

LinearForm scaled(LinearForm f, const Rational& q) {
  f.constant *= q;
  f.pi_coeff *= q;
  for (auto& t : f.terms) t.coeff *= q;
  for (auto& [m, c] : f.surds) c *= q;
  return f;
}

LinearForm combined(LinearForm a, const LinearForm& b, int sign) {
  Rational s(sign);
  a.constant += s * b.constant;
  a.pi_coeff += s * b.pi_coeff;
  for (const auto& t : b.terms) {
    TrigTerm u = t;
    u.coeff *= s;
    a.terms.push_back(u);
  }
  for (const auto& [m, c] : b.surds) a.surds[m] += s * c;
  return a;
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

LinearForm lower(const ExprNode& ast) {
  switch (ast.kind) {
    case ExprNode::Kind::Number: {
      LinearForm f;
      f.constant = ast.value;
      return f;
    }
    case ExprNode::Kind::Pi: {
      LinearForm f;
      f.pi_coeff = 1;
      return f;
    }
    case ExprNode::Kind::Add:
      return combined(lower(*ast.a), lower(*ast.b), 1);
    case ExprNode::Kind::Sub:
      return combined(lower(*ast.a), lower(*ast.b), -1);
    case ExprNode::Kind::Negate:
      return scaled(lower(*ast.a), -1);
    case ExprNode::Kind::Mul: {
      LinearForm l = lower(*ast.a), r = lower(*ast.b);
      if (l.is_rational()) return scaled(std::move(r), l.constant);
      if (r.is_rational()) return scaled(std::move(l), r.constant);
      throw LowerError("unsupported expression: nonlinear product");
    }
    case ExprNode::Kind::Div: {
      LinearForm l = lower(*ast.a), r = lower(*ast.b);
      if (!r.is_rational())
        throw LowerError("unsupported expression: non-rational divisor");
      if (r.constant.is_zero()) throw LowerError("division by zero");
      return scaled(std::move(l), Rational(1) / r.constant);
    }
    case ExprNode::Kind::Sqrt: {
      LinearForm arg = lower(*ast.a);
      if (!arg.is_rational() || arg.constant.sign() < 0)
        throw LowerError("sqrt argument must be a nonnegative rational");
      LinearForm f;
      if (arg.constant.is_zero()) return f;
      // sqrt(p/q) = sqrt(p q)/q; then strip the square part of p q.
      mpz_class pq = arg.constant.num() * arg.constant.den();
      if (!pq.fits_uint_p())
        throw LowerError("sqrt argument too large");
      auto [s, m] = strip_square_part(pq.get_ui());
      Rational coeff = Rational(long(s)) / Rational(arg.constant.den());
      if (m == 1)
        f.constant = coeff;
      else
        f.surds[m] = coeff;
      return f;
    }
    case ExprNode::Kind::Sin:
    case ExprNode::Kind::Cos:
    case ExprNode::Kind::Tan: {
      LinearForm arg = lower(*ast.a);
      if (!arg.constant.is_zero() || !arg.terms.empty() || !arg.surds.empty())
        throw LowerError("angle is not a rational multiple of pi");
      if (!arg.pi_coeff.num().fits_slong_p() ||
          !arg.pi_coeff.den().fits_ulong_p())
        throw LowerError("angle out of range");
      TrigKind k = ast.kind == ExprNode::Kind::Sin  ? TrigKind::Sin
                   : ast.kind == ExprNode::Kind::Cos ? TrigKind::Cos
                                                     : TrigKind::Tan;
      LinearForm f;
      f.terms.push_back({Rational(1), k, arg.pi_coeff.num().get_si(),
                         static_cast<unsigned>(arg.pi_coeff.den().get_ui())});
      return f;
    }
  }
  throw std::logic_error("unreachable");
}

Identity make_identity(const LinearForm& lhs, const LinearForm& rhs) {
  if (!lhs.pi_coeff.is_zero() || !rhs.pi_coeff.is_zero())
    throw LowerError("a bare pi cannot appear in an identity");
  if (!rhs.terms.empty())
    throw LowerError("trig terms on the right-hand side are not supported: " +
                     render_term(rhs.terms.front()));

  Identity id;
  id.lhs = lhs.terms;
  id.lhs_constant = lhs.constant - rhs.constant;

  std::map<unsigned, Rational> surds = rhs.surds;
  for (const auto& [m, c] : lhs.surds) surds[m] -= c;
  for (auto it = surds.begin(); it != surds.end();)
    it = it->second.is_zero() ? surds.erase(it) : std::next(it);
  if (surds.size() > 1)
    throw LowerError("more than one distinct surd in the identity");
  if (surds.empty()) {
    id.rhs = {Rational(0), 1};
  } else {
    id.rhs = {surds.begin()->second, surds.begin()->first};
  }
  // A rational right-hand side folds into the m = 1 surd slot.
  if (id.rhs.m == 1) {
    id.rhs.q -= id.lhs_constant;
    id.lhs_constant = 0;
  }
  return id;
}

double eval_numeric(const ExprNode& ast) {
  switch (ast.kind) {
    case ExprNode::Kind::Number: return ast.value.to_double();
    case ExprNode::Kind::Pi: return M_PI;
    case ExprNode::Kind::Add: return eval_numeric(*ast.a) + eval_numeric(*ast.b);
    case ExprNode::Kind::Sub: return eval_numeric(*ast.a) - eval_numeric(*ast.b);
    case ExprNode::Kind::Mul: return eval_numeric(*ast.a) * eval_numeric(*ast.b);
    case ExprNode::Kind::Div: return eval_numeric(*ast.a) / eval_numeric(*ast.b);
    case ExprNode::Kind::Negate: return -eval_numeric(*ast.a);
    case ExprNode::Kind::Sqrt: return std::sqrt(eval_numeric(*ast.a));
    case ExprNode::Kind::Sin: return std::sin(eval_numeric(*ast.a));
    case ExprNode::Kind::Cos: return std::cos(eval_numeric(*ast.a));
    case ExprNode::Kind::Tan: return std::tan(eval_numeric(*ast.a));
  }
  throw std::logic_error("unreachable");
}

}  // namespace cyclotrig
