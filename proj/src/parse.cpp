#include "monolab/parse.hpp"

#include <algorithm>
#include <cctype>

namespace monolab {

PolyExpr PolyExpr::num(Rat v) {
  PolyExpr e;
  e.kind = Kind::Num;
  e.value = std::move(v);
  return e;
}

PolyExpr PolyExpr::var(std::string n) {
  PolyExpr e;
  e.kind = Kind::Var;
  e.name = std::move(n);
  return e;
}

namespace {

class Parser {
 public:
  Parser(const std::string& src, const std::vector<std::string>& allowed)
      : src_(src), allowed_(allowed) {}

  PolyExpr run() {
    PolyExpr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  const std::string& src_;
  const std::vector<std::string>& allowed_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw error(errc::SyntaxError,
                msg + " at position " + std::to_string(pos_) + " in '" + src_ + "'");
  }

  void skip_ws() {
    while (pos_ < src_.size() && isspace((unsigned char)src_[pos_])) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool digit_at(size_t i) { return i < src_.size() && isdigit((unsigned char)src_[i]); }

  PolyExpr expr() {
    PolyExpr e = term();
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      PolyExpr rhs = term();
      PolyExpr parent;
      parent.kind = c == '+' ? PolyExpr::Kind::Add : PolyExpr::Kind::Sub;
      parent.kids = {std::move(e), std::move(rhs)};
      e = std::move(parent);
    }
    return e;
  }

  PolyExpr term() {
    PolyExpr e = factor();
    while (peek() == '*') {
      ++pos_;
      PolyExpr rhs = factor();
      PolyExpr parent;
      parent.kind = PolyExpr::Kind::Mul;
      parent.kids = {std::move(e), std::move(rhs)};
      e = std::move(parent);
    }
    return e;
  }

  PolyExpr factor() {
    PolyExpr b = base();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!digit_at(pos_)) fail("expected a natural number after '^'");
      unsigned long v = 0;
      while (digit_at(pos_)) {
        v = v * 10 + unsigned(src_[pos_] - '0');
        if (v > 1000000) fail("exponent too large");
        ++pos_;
      }
      PolyExpr p;
      p.kind = PolyExpr::Kind::Pow;
      p.exponent = unsigned(v);
      p.kids = {std::move(b)};
      return p;
    }
    return b;
  }

  PolyExpr base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      PolyExpr e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (isdigit((unsigned char)c)) return number(false);
    if ((c == '-' || c == '+') && digit_at(pos_ + 1)) {
      bool neg = c == '-';
      ++pos_;
      return number(neg);
    }
    if (isalpha((unsigned char)c)) {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_'))
        ++pos_;
      std::string name = src_.substr(start, pos_ - start);
      if (std::find(allowed_.begin(), allowed_.end(), name) == allowed_.end()) {
        pos_ = start;
        throw error(errc::UnknownVariable,
                    "'" + name + "' at position " + std::to_string(start) + " in '" +
                        src_ + "'");
      }
      return PolyExpr::var(name);
    }
    fail("expected a number, variable or '('");
  }

  PolyExpr number(bool neg) {
    Int n = read_int();
    Int d(1);
    if (pos_ < src_.size() && src_[pos_] == '/' && digit_at(pos_ + 1)) {
      ++pos_;
      d = read_int();
      if (d == 0) fail("zero denominator");
    }
    Rat q = make_rat(neg ? Int(-n) : n, d);
    return PolyExpr::num(q);
  }

  Int read_int() {
    Int v(0);
    while (digit_at(pos_)) {
      v = v * 10 + int(src_[pos_] - '0');
      ++pos_;
    }
    return v;
  }
};

}  // namespace

PolyExpr parse_expr(const std::string& src, const std::vector<std::string>& allowed) {
  return Parser(src, allowed).run();
}

MPoly to_mpoly(const PolyExpr& e) {
  switch (e.kind) {
    case PolyExpr::Kind::Num: return MPoly::constant(e.value);
    case PolyExpr::Kind::Var: return MPoly::var(e.name);
    case PolyExpr::Kind::Add: return to_mpoly(e.kids[0]) + to_mpoly(e.kids[1]);
    case PolyExpr::Kind::Sub: return to_mpoly(e.kids[0]) - to_mpoly(e.kids[1]);
    case PolyExpr::Kind::Mul: return to_mpoly(e.kids[0]) * to_mpoly(e.kids[1]);
    case PolyExpr::Kind::Pow: return mp_pow(to_mpoly(e.kids[0]), e.exponent);
  }
  throw std::logic_error("unreachable");
}

MPoly parse_poly(const std::string& src, const std::vector<std::string>& allowed) {
  return to_mpoly(parse_expr(src, allowed));
}

}  // namespace monolab
