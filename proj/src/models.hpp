#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lincomb.hpp"
#include "scalar.hpp"
#include "term.hpp"

namespace prb::models {

// ---------------------------------------------------------------------------
// Q[x, y] with the Poisson bracket generated by [x, y] = y, and the split
// Rota-Baxter operator of weight 1 that kills Q[x] and negates y*Q[x, y].
// ---------------------------------------------------------------------------

class Poly2 {
 public:
  std::map<std::pair<int, int>, Rational> c;  // (i, j) -> coeff of x^i y^j

  static Poly2 zero() { return {}; }
  static Poly2 mono(int i, int j, Rational k = Rational(1));
  static Poly2 var_x() { return mono(1, 0); }
  static Poly2 var_y() { return mono(0, 1); }

  bool is_zero() const { return c.empty(); }
  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator-() const;
  Poly2 scaled(const Rational& s) const;
  bool operator==(const Poly2& o) const { return c == o.c; }

  Poly2 dx() const;
  Poly2 dy() const;
  std::string text() const;
};

// closed form: (df/dx * dg/dy - df/dy * dg/dx) * y
Poly2 poisson_closed(const Poly2& f, const Poly2& g);
// independent route: bilinear recursion peeling one variable at a time via
// the derivation property, with [x, y] = y at the bottom
Poly2 poisson_leibniz(const Poly2& f, const Poly2& g);
// P(f(x)) = 0, P(y g(x, y)) = -y g(x, y)
Poly2 split_op(const Poly2& f);

struct Poly2RBModel {
  using Elem = Poly2;
  OpLaw law{OpKind::RotaBaxter, Rational(1)};
  bool verified = false;

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem scale(const Rational& s, const Elem& a) const { return a.scaled(s); }
  Elem zero() const { return Poly2::zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem bracket(const Elem& a, const Elem& b) const {
    return poisson_closed(a, b);
  }
  Elem op(const Elem& a) const { return split_op(a); }

  // Poisson axioms and the operator law on all monomial pairs/triples up to
  // total degree `maxdeg`; returns "" or the failing axiom.
  std::string verify(int maxdeg = 4);
};

// Q[t] with the zero bracket and the integration operator, a Rota-Baxter
// operator of weight 0.
class Poly1 {
 public:
  std::map<int, Rational> c;
  static Poly1 zero() { return {}; }
  static Poly1 mono(int i, Rational k = Rational(1));
  bool is_zero() const { return c.empty(); }
  Poly1 operator+(const Poly1& o) const;
  Poly1 operator-(const Poly1& o) const;
  Poly1 operator*(const Poly1& o) const;
  Poly1 scaled(const Rational& s) const;
  bool operator==(const Poly1& o) const { return c == o.c; }
  std::string text() const;
};

Poly1 integrate(const Poly1& f);  // t^n -> t^{n+1}/(n+1)

struct Poly1IntModel {
  using Elem = Poly1;
  OpLaw law{OpKind::RotaBaxter, Rational(0)};
  bool verified = false;

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem scale(const Rational& s, const Elem& a) const { return a.scaled(s); }
  Elem zero() const { return Poly1::zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem bracket(const Elem&, const Elem&) const { return Poly1::zero(); }
  Elem op(const Elem& a) const { return integrate(a); }

  std::string verify(int maxdeg = 6);
};

// Q[x, y] with the same bracket and the Nijenhuis operator N = (mult by x);
// multiplication by a fixed element is a Nijenhuis operator on any Poisson
// algebra.
struct Poly2NijModel {
  using Elem = Poly2;
  OpLaw law{OpKind::Nijenhuis, Rational(0)};
  bool verified = false;

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem scale(const Rational& s, const Elem& a) const { return a.scaled(s); }
  Elem zero() const { return Poly2::zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem bracket(const Elem& a, const Elem& b) const {
    return poisson_closed(a, b);
  }
  Elem op(const Elem& a) const { return Poly2::var_x() * a; }

  std::string verify(int maxdeg = 4);
};

// ---------------------------------------------------------------------------
// Finite-dimensional algebras by structure constants, tensors r in A (x) A,
// the associative Yang-Baxter equation and principal operators.
// ---------------------------------------------------------------------------

using Vec = std::vector<Rational>;

class StructAlgebra {
 public:
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::vector<std::vector<Vec>> prod;                 // prod[i][j] in A
  std::optional<std::vector<std::vector<Vec>>> brk;   // optional bracket

  static StructAlgebra from_json_text(const std::string& text);

  // "" when every axiom holds; otherwise the failing axiom with indices.
  std::string validate() const;

  Vec zero() const { return Vec(dim, Rational(0)); }
  Vec basis(std::size_t i) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec bracket(const Vec& a, const Vec& b) const;
  std::optional<Vec> unit() const;  // two-sided unit of the product, if any
};

struct Tensor2 {
  std::vector<Vec> c;  // c[p][q]: coefficient of e_p (x) e_q

  static Tensor2 zero(std::size_t dim);
  static Tensor2 unit_unit(const StructAlgebra& a, const Rational& s);  // s(1x1)
};

// r13 r12 - r12 r23 + r23 r13 == lambda * r13, computed exactly in AxAxA.
bool check_aybe(const StructAlgebra& a, const Tensor2& r,
                const Rational& lambda);

// matrix of x -> sum a_i x b_i, columns indexed by basis vectors
std::vector<Vec> principal_matrix(const StructAlgebra& a, const Tensor2& r);

struct CheckReport {
  bool pass = true;
  std::vector<std::string> failures;

  void fail(std::string s) {
    pass = false;
    failures.push_back(std::move(s));
  }
  void merge(const CheckReport& o) {
    if (!o.pass) pass = false;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

// operator law (both products) on all basis pairs
CheckReport check_rb_operator_struct(const StructAlgebra& a,
                                     const std::vector<Vec>& P,
                                     const OpLaw& law);

// Solutions of the weight-lambda AYBE induce principal operators that are
// Rota-Baxter of weight (-lambda) on both products; the report also states
// the contraction identity sum a_i a_j b_i b_j = lambda sum a_k b_k.
CheckReport check_prop2(const StructAlgebra& a, const Tensor2& r,
                        const Rational& lambda);

// ---------------------------------------------------------------------------
// Derived structures and identity checkers over an arbitrary carrier.
// ---------------------------------------------------------------------------

template <class E>
struct VS {
  std::function<E(const E&, const E&)> add, sub;
  std::function<bool(const E&, const E&)> eq;
};

template <class E>
using Bilinear = std::function<E(const E&, const E&)>;

template <class E>
struct FourOps {
  Bilinear<E> dot, wedge, circ, vee;
};

template <class E>
CheckReport check_prepoisson(const VS<E>& vs, const Bilinear<E>& circ,
                             const Bilinear<E>& star,
                             const std::vector<std::array<E, 3>>& triples) {
  CheckReport rep;
  auto chk = [&](const char* name, const E& l, const E& r, std::size_t idx) {
    if (!vs.eq(l, r))
      rep.fail(std::string(name) + " fails on sample triple #" +
               std::to_string(idx));
  };
  for (std::size_t idx = 0; idx < triples.size(); ++idx) {
    const auto& [x, y, z] = triples[idx];
    // precommutative (Zinbiel): x o (y o z) = (x o y + y o x) o z
    chk("zinbiel", circ(x, circ(y, z)),
        circ(vs.add(circ(x, y), circ(y, x)), z), idx);
    // preLie: (x*y)*z - x*(y*z) = (y*x)*z - y*(x*z)
    chk("prelie",
        vs.sub(star(star(x, y), z), star(x, star(y, z))),
        vs.sub(star(star(y, x), z), star(y, star(x, z))), idx);
    // (x*y - y*x) o z = x*(y o z) - y o (x*z)
    chk("leibniz-1", circ(vs.sub(star(x, y), star(y, x)), z),
        vs.sub(star(x, circ(y, z)), circ(y, star(x, z))), idx);
    // (x o y + y o x)*z = x o (y*z) + y o (x*z)
    chk("leibniz-2", star(vs.add(circ(x, y), circ(y, x)), z),
        vs.add(circ(x, star(y, z)), circ(y, star(x, z))), idx);
  }
  return rep;
}

// NS-Poisson identities over a carrier with (dot, wedge, circ, vee):
// (circ, vee) NS-commutative, (dot, wedge) NS-Lie, plus the three mixed
// identities, with star(a,b) = a.b - b.a + a^b and ast(a,b) = aob + boa + avb.
template <class E>
CheckReport check_ns_poisson(const VS<E>& vs, const FourOps<E>& o,
                             const std::vector<std::array<E, 3>>& triples) {
  CheckReport rep;
  auto star = [&](const E& a, const E& b) {
    return vs.add(vs.sub(o.dot(a, b), o.dot(b, a)), o.wedge(a, b));
  };
  auto ast = [&](const E& a, const E& b) {
    return vs.add(vs.add(o.circ(a, b), o.circ(b, a)), o.vee(a, b));
  };
  auto chk = [&](const char* name, const E& l, const E& r, std::size_t idx) {
    if (!vs.eq(l, r))
      rep.fail(std::string(name) + " fails on sample triple #" +
               std::to_string(idx));
  };
  for (std::size_t idx = 0; idx < triples.size(); ++idx) {
    const auto& [a, b, c] = triples[idx];
    const E zero_e = vs.sub(a, a);
    chk("wedge-anticommutative", vs.add(o.wedge(a, b), o.wedge(b, a)), zero_e,
        idx);
    chk("vee-commutative", o.vee(a, b), o.vee(b, a), idx);
    // NS-Lie
    chk("ns-lie-leibniz", o.dot(star(a, b), c),
        vs.sub(o.dot(a, o.dot(b, c)), o.dot(b, o.dot(a, c))), idx);
    chk("ns-lie-jacobi",
        vs.add(vs.add(star(star(a, b), c), star(star(b, c), a)),
               star(star(c, a), b)),
        zero_e, idx);
    // NS-commutative
    chk("ns-com-zinbiel", o.circ(a, o.circ(b, c)), o.circ(ast(a, b), c), idx);
    chk("ns-com-assoc", ast(a, ast(b, c)), ast(ast(a, b), c), idx);
    // mixed
    chk("ns-mixed-1", star(ast(a, b), c),
        vs.add(ast(a, star(b, c)), ast(b, star(a, c))), idx);
    chk("ns-mixed-2", o.dot(ast(a, b), c),
        vs.add(o.circ(a, o.dot(b, c)), o.circ(b, o.dot(a, c))), idx);
    chk("ns-mixed-3", o.circ(star(a, b), c),
        vs.sub(o.circ(a, o.dot(b, c)), o.dot(b, o.circ(a, c))), idx);
  }
  return rep;
}

// Derived operations. Proposition-3a pair over a verified weight-0
// Rota-Baxter model: x o y = R(x)y, x*y = [R(x), y].
template <class M>
std::pair<Bilinear<typename M::Elem>, Bilinear<typename M::Elem>>
derived_prepoisson(const M& m) {
  if (!m.verified || m.law.kind != OpKind::RotaBaxter || m.law.weight != 0)
    throw domain_error("derived prePoisson pair needs a verified weight-0 operator");
  using E = typename M::Elem;
  Bilinear<E> circ = [&m](const E& a, const E& b) { return m.mul(m.op(a), b); };
  Bilinear<E> star = [&m](const E& a, const E& b) {
    return m.bracket(m.op(a), b);
  };
  return {circ, star};
}

// Proposition-3b quadruple over a verified nonzero-weight model:
// x o y = R(x)y, x.y = lambda xy, x*y = [R(x),y], x(star)y = lambda [x,y].
template <class M>
FourOps<typename M::Elem> derived_postpoisson(const M& m) {
  if (!m.verified || m.law.kind != OpKind::RotaBaxter || m.law.weight == 0)
    throw domain_error(
        "derived postPoisson operations need a verified nonzero-weight operator");
  using E = typename M::Elem;
  FourOps<E> o;
  Rational lam = m.law.weight;
  o.circ = [&m](const E& a, const E& b) { return m.mul(m.op(a), b); };
  o.vee = [&m, lam](const E& a, const E& b) { return m.mul(a, b).scaled(lam); };
  o.dot = [&m](const E& a, const E& b) { return m.bracket(m.op(a), b); };
  o.wedge = [&m, lam](const E& a, const E& b) {
    return m.bracket(a, b).scaled(lam);
  };
  return o;
}

// Proposition-4 quadruple over a verified Nijenhuis model:
// a o b = N(a)b, a v b = -N(ab), a.b = [N(a), b], a^b = -N([a, b]).
template <class M>
FourOps<typename M::Elem> derived_ns_quadruple(const M& m) {
  if (!m.verified || m.law.kind != OpKind::Nijenhuis)
    throw domain_error("derived NS operations need a verified Nijenhuis operator");
  using E = typename M::Elem;
  FourOps<E> o;
  o.circ = [&m](const E& a, const E& b) { return m.mul(m.op(a), b); };
  o.vee = [&m](const E& a, const E& b) {
    return m.scale(Rational(-1), m.op(m.mul(a, b)));
  };
  o.dot = [&m](const E& a, const E& b) { return m.bracket(m.op(a), b); };
  o.wedge = [&m](const E& a, const E& b) {
    return m.scale(Rational(-1), m.op(m.bracket(a, b)));
  };
  return o;
}

// ---------------------------------------------------------------------------
// Evaluation homomorphism from the free algebra into a model.
// ---------------------------------------------------------------------------

template <class M>
typename M::Elem eval_lie(const M& m,
                          const std::map<std::string, typename M::Elem>& phi,
                          const LiePtr& t);

template <class M>
typename M::Elem eval_atom(const M& m,
                           const std::map<std::string, typename M::Elem>& phi,
                           const AtomPtr& a);

template <class M>
typename M::Elem eval_word(const M& m,
                           const std::map<std::string, typename M::Elem>& phi,
                           const WordPtr& w) {
  typename M::Elem acc = eval_atom(m, phi, w->factors[0]);
  for (std::size_t i = 1; i < w->factors.size(); ++i)
    acc = m.mul(acc, eval_atom(m, phi, w->factors[i]));
  return acc;
}

template <class M>
typename M::Elem eval_atom(const M& m,
                           const std::map<std::string, typename M::Elem>& phi,
                           const AtomPtr& a) {
  switch (a->kind) {
    case AtomKind::Gen: {
      auto it = phi.find(a->gen.symbol);
      if (it == phi.end())
        throw domain_error("no assignment for generator " + a->gen.symbol);
      return it->second;
    }
    case AtomKind::Lie:
      return eval_lie(m, phi, a->lie);
    case AtomKind::Op:
      return m.op(eval_word(m, phi, a->op_arg));
  }
  throw domain_error("unreachable atom kind");
}

template <class M>
typename M::Elem eval_lie(const M& m,
                          const std::map<std::string, typename M::Elem>& phi,
                          const LiePtr& t) {
  if (t->is_leaf()) return eval_atom(m, phi, t->atom);
  return m.bracket(eval_lie(m, phi, t->left), eval_lie(m, phi, t->right));
}

// Linear extension; the model operator must be verified and carry the same
// law as the free engine the element came from.
template <class M>
typename M::Elem eval_hom(const M& m, const OpLaw& engine_law,
                          const std::map<std::string, typename M::Elem>& phi,
                          const LinComb& c) {
  if (!m.verified)
    throw domain_error("refusing to evaluate into an unverified model");
  if (m.law.kind != engine_law.kind ||
      (!m.law.is_ns() && m.law.weight != engine_law.weight))
    throw domain_error("model operator law does not match the engine");
  typename M::Elem acc = m.zero();
  for (const auto& [w, k] : c)
    acc = m.add(acc, m.scale(k, eval_word(m, phi, w)));
  return acc;
}

}  // namespace prb::models
