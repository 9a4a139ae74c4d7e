#include "engine.hpp"

namespace prb {

// Canonical Lie words realize the coproduct of the free Lie algebra on the
// generators with the abelian Lie algebra on the operator atoms: a bracket
// of two operator atoms always leaves the Lie layer through the operator
// identity, and modulo those reductions the ad-actions of operator atoms
// commute. Concretely a canonical tree is a Hall word over decorated
// letters,
//
//   letter := generator | [p, letter]   (decoration chain, p an operator
//             atom, decorations weakly ascending outward)
//   word   := letter | [u, v]           (u < v; v a letter, or v = [v1, v2]
//                                        with v1 <= u)
//
// Straightening uses anticommutativity, the Jacobi rewrite
// [u,[v1,v2]] = [[u,v1],v2] - [[u,v2],v1], the derivation rule for
// decorations, and ad(p)ad(q) = ad(q)ad(p) + ad([p,q]) where [p,q] expands
// through the operator identity into the Poisson level.

namespace {

WordPtr word_of_lie(const LiePtr& t) { return word_of(atom_of_lie(t)); }

bool is_p_leaf(const LiePtr& t) {
  return t->is_leaf() && t->atom->kind == AtomKind::Op;
}

bool is_gen_leaf(const LiePtr& t) {
  return t->is_leaf() && t->atom->kind == AtomKind::Gen;
}

// canonical node whose left child is an operator leaf, i.e. a decoration
bool is_chain_node(const LiePtr& t) {
  return !t->is_leaf() && is_p_leaf(t->left);
}

}  // namespace

// ad(p) applied to a canonical decorated-letter word.
LinComb Engine::decorate(const AtomPtr& p, const LiePtr& v) {
  tick();
  if (is_gen_leaf(v))
    return LinComb::term(word_of(make_lie(lie_node(lie_leaf(p), v))));
  if (is_chain_node(v)) {
    const AtomPtr& q = v->left->atom;
    if (cmp_atom(p, q) >= 0)  // p joins as the outermost decoration
      return LinComb::term(word_of(make_lie(lie_node(lie_leaf(p), v))));
    // ad(p)ad(q)w = ad(q)(ad(p)w) + ad([p,q])w
    LinComb inner = decorate(p, v->right);
    LinComb t1 = bracket(LinComb::term(word_of(q)), inner);
    LinComb e = bracket_atoms(p, q);
    LinComb t2 = bracket(e, LinComb::term(word_of_lie(v->right)));
    return t1 + t2;
  }
  // Hall node: ad(p)[A,B] = [ad(p)A, B] + [A, ad(p)B]
  LinComb t1, t2;
  if (cfg_.strategy == Strategy::LeftFirst) {
    t1 = bracket(decorate(p, v->left), LinComb::term(word_of_lie(v->right)));
    t2 = bracket(LinComb::term(word_of_lie(v->left)), decorate(p, v->right));
  } else {
    t2 = bracket(LinComb::term(word_of_lie(v->left)), decorate(p, v->right));
    t1 = bracket(decorate(p, v->left), LinComb::term(word_of_lie(v->right)));
  }
  return t1 + t2;
}

LinComb Engine::lie_mul(const LiePtr& u, const LiePtr& v) {
  tick();
  if (eq_lie(u, v)) return {};
  const bool up = is_p_leaf(u);
  const bool vp = is_p_leaf(v);
  if (up && vp) return bracket_atoms(u->atom, v->atom);
  if (up) return decorate(u->atom, v);
  if (vp) return -decorate(v->atom, u);
  int c = cmp_lie(u, v);
  if (c == 0) return {};
  if (c > 0) return -lie_mul(v, u);
  // u < v, both decorated-letter words
  if (v->is_leaf() || is_chain_node(v) || cmp_lie(v->left, u) <= 0)
    return LinComb::term(word_of(make_lie(lie_node(u, v))));
  // Hall violation: [u,[v1,v2]] = [[u,v1],v2] - [[u,v2],v1]
  LinComb a_part, b_part;
  if (cfg_.strategy == Strategy::LeftFirst) {
    a_part = bracket(lie_mul(u, v->left), LinComb::term(word_of_lie(v->right)));
    b_part = bracket(lie_mul(u, v->right), LinComb::term(word_of_lie(v->left)));
  } else {
    b_part = bracket(lie_mul(u, v->right), LinComb::term(word_of_lie(v->left)));
    a_part = bracket(lie_mul(u, v->left), LinComb::term(word_of_lie(v->right)));
  }
  return a_part - b_part;
}

LinComb Engine::lie_bracket(const LiePtr& u, const LiePtr& v) {
  return bracket(word_of_lie(u), word_of_lie(v));
}

LinComb Engine::lie_normalize(const LiePtr& raw) {
  if (raw->is_leaf()) return LinComb::term(word_of(raw->atom));
  if (cfg_.strategy == Strategy::LeftFirst) {
    LinComb l = lie_normalize(raw->left);
    LinComb r = lie_normalize(raw->right);
    return bracket(l, r);
  }
  LinComb r = lie_normalize(raw->right);
  LinComb l = lie_normalize(raw->left);
  return bracket(l, r);
}

namespace {

bool chain_ok(Engine& eng, const LiePtr& t);

// decorated-letter word check
bool bword_ok(Engine& eng, const LiePtr& t) {
  if (t->is_leaf()) return is_gen_leaf(t);
  if (is_chain_node(t)) return chain_ok(eng, t);
  if (!bword_ok(eng, t->left) || !bword_ok(eng, t->right)) return false;
  if (cmp_lie(t->left, t->right) >= 0) return false;
  if (!t->right->is_leaf() && !is_chain_node(t->right) &&
      cmp_lie(t->right->left, t->left) > 0)
    return false;
  return true;
}

bool chain_ok(Engine& eng, const LiePtr& t) {
  if (!is_chain_node(t)) return false;
  if (eng.is_expressible(t->left->atom)) return false;
  const LiePtr& r = t->right;
  if (is_gen_leaf(r)) return true;
  if (!is_chain_node(r)) return false;
  if (cmp_atom(r->left->atom, t->left->atom) > 0) return false;
  return chain_ok(eng, r);
}

}  // namespace

bool Engine::is_canonical_lie(const LiePtr& t) {
  if (t->is_leaf()) return false;  // Lie atoms have length >= 2
  return bword_ok(*this, t);
}

}  // namespace prb
