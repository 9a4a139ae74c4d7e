#include "parser.hpp"

#include <cctype>

namespace prb {

namespace {

struct Parser {
  std::string_view s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg + " at position " + std::to_string(i), i);
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  ExprPtr mk(Expr::Kind k) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->pos = i;
    return e;
  }

  ExprPtr parse() {
    auto e = expr();
    skip_ws();
    if (i != s.size()) fail("trailing input");
    return e;
  }

  ExprPtr expr() {
    skip_ws();
    ExprPtr lhs;
    if (eat('-')) {
      lhs = mk(Expr::Kind::Neg);
      lhs->a = term();
    } else {
      lhs = term();
    }
    for (;;) {
      skip_ws();
      if (eat('+')) {
        auto e = mk(Expr::Kind::Add);
        e->a = std::move(lhs);
        e->b = term();
        lhs = std::move(e);
      } else if (eat('-')) {
        auto e = mk(Expr::Kind::Sub);
        e->a = std::move(lhs);
        e->b = term();
        lhs = std::move(e);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    auto lhs = factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        auto e = mk(Expr::Kind::Mul);
        e->a = std::move(lhs);
        e->b = factor();
        lhs = std::move(e);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    skip_ws();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '(') {
      ++i;
      auto e = expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++i;
      auto e = mk(Expr::Kind::Bracket);
      e->a = expr();
      expect(',');
      e->b = expr();
      expect(']');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return ident();
    fail(std::string("unexpected character '") + c + "'");
  }

  ExprPtr number() {
    auto e = mk(Expr::Kind::Num);
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    std::string num(s.substr(start, i - start));
    if (i < s.size() && s[i] == '/') {
      ++i;
      std::size_t dstart = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      if (dstart == i) fail("expected denominator digits");
      num += "/" + std::string(s.substr(dstart, i - dstart));
    }
    e->num = rational_from_string(num);
    return e;
  }

  ExprPtr ident() {
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                            s[i] == '_'))
      ++i;
    std::string name(s.substr(start, i - start));
    if ((name == "R" || name == "N")) {
      skip_ws();
      if (i < s.size() && s[i] == '(') {
        ++i;
        auto e = mk(Expr::Kind::Op);
        e->opsym = name[0];
        e->a = expr();
        expect(')');
        return e;
      }
      i = start;
      fail("operator symbol " + name + " must be applied as " + name + "(...)");
    }
    auto e = mk(Expr::Kind::Var);
    e->var = std::move(name);
    return e;
  }
};

void collect_gens(const Expr& e, std::vector<std::string>& out) {
  if (e.kind == Expr::Kind::Var) {
    for (const auto& g : out)
      if (g == e.var) return;
    out.push_back(e.var);
    return;
  }
  if (e.a) collect_gens(*e.a, out);
  if (e.b) collect_gens(*e.b, out);
}

// scalar + combination; the scalar part tracks transient pure-number
// subexpressions and must vanish in the final value
struct Val {
  Rational sc;
  LinComb comb;
};

Val eval(Engine& eng, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Num:
      return {e.num, {}};
    case Expr::Kind::Var:
      return {Rational(0), LinComb::term(eng.gen_word(e.var))};
    case Expr::Kind::Neg: {
      Val a = eval(eng, *e.a);
      return {-a.sc, -a.comb};
    }
    case Expr::Kind::Add: {
      Val a, b;
      if (eng.strategy() == Strategy::LeftFirst) {
        a = eval(eng, *e.a);
        b = eval(eng, *e.b);
      } else {
        b = eval(eng, *e.b);
        a = eval(eng, *e.a);
      }
      return {a.sc + b.sc, a.comb + b.comb};
    }
    case Expr::Kind::Sub: {
      Val a = eval(eng, *e.a);
      Val b = eval(eng, *e.b);
      return {a.sc - b.sc, a.comb - b.comb};
    }
    case Expr::Kind::Mul: {
      Val a, b;
      if (eng.strategy() == Strategy::LeftFirst) {
        a = eval(eng, *e.a);
        b = eval(eng, *e.b);
      } else {
        b = eval(eng, *e.b);
        a = eval(eng, *e.a);
      }
      Val r;
      r.sc = a.sc * b.sc;
      r.comb = a.comb.scaled(b.sc) + b.comb.scaled(a.sc) +
               eng.com_product(a.comb, b.comb);
      return r;
    }
    case Expr::Kind::Bracket: {
      Val a = eval(eng, *e.a);
      Val b = eval(eng, *e.b);
      // constants are central for the bracket
      return {Rational(0), eng.bracket(a.comb, b.comb)};
    }
    case Expr::Kind::Op: {
      if (e.opsym != eng.opsym())
        throw domain_error(std::string("operator symbol ") + e.opsym +
                           " does not match this engine (" + eng.opsym() + ")");
      Val a = eval(eng, *e.a);
      if (a.sc != 0)
        throw domain_error(
            "operator applied to a constant term (non-unital algebra)");
      return {Rational(0), eng.op_apply(a.comb)};
    }
  }
  throw domain_error("unreachable expression kind");
}

}  // namespace

ExprPtr parse_expr(std::string_view text) {
  Parser p{text};
  return p.parse();
}

std::vector<std::string> collect_generators(const Expr& e) {
  std::vector<std::string> out;
  collect_gens(e, out);
  return out;
}

LinComb evaluate(Engine& eng, const Expr& e) {
  Val v = eval(eng, e);
  if (v.sc != 0)
    throw domain_error(
        "expression has a nonzero constant term; the algebra is non-unital");
  return v.comb;
}

}  // namespace prb
