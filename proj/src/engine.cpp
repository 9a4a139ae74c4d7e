#include "engine.hpp"

#include <algorithm>

#include "jsonio.hpp"

namespace prb {

Engine::Engine(Config cfg) : cfg_(std::move(cfg)) {
  if (cfg_.law.is_ns() && cfg_.law.weight != 0)
    throw domain_error("a Nijenhuis engine carries no weight parameter");
  gen_atoms_.reserve(cfg_.generators.size());
  for (std::uint32_t i = 0; i < cfg_.generators.size(); ++i)
    gen_atoms_.push_back(make_gen(cfg_.generators[i], i));
}

AtomPtr Engine::gen_atom(std::string_view symbol) const {
  for (const auto& a : gen_atoms_)
    if (a->gen.symbol == symbol) return a;
  throw domain_error("unknown generator '" + std::string(symbol) + "'");
}

WordPtr Engine::gen_word(std::string_view symbol) const {
  return word_of(gen_atom(symbol));
}

void Engine::tick() {
  if (fuel_used_.fetch_add(1, std::memory_order_relaxed) >= cfg_.fuel_cap)
    throw fuel_error("rewriting fuel exhausted (cap " +
                     std::to_string(cfg_.fuel_cap) + " steps)");
}

LinComb Engine::op_apply_word(const WordPtr& w) {
  return LinComb::term(word_of(make_op(w)));
}

LinComb Engine::op_apply(const LinComb& x) {
  LinComb r;
  for (const auto& [w, c] : x) r.add(word_of(make_op(w)), c);
  return r;
}

namespace {

// monomial product: at most one operator factor between the two words
WordPtr mul_monomials(const WordPtr& u, const WordPtr& v) {
  std::vector<AtomPtr> fs;
  fs.reserve(u->factors.size() + v->factors.size());
  fs.insert(fs.end(), u->factors.begin(), u->factors.end());
  fs.insert(fs.end(), v->factors.begin(), v->factors.end());
  return make_word(std::move(fs));
}

std::pair<AtomPtr, std::vector<AtomPtr>> split_op(const WordPtr& w) {
  AtomPtr op;
  std::vector<AtomPtr> rest;
  for (const auto& f : w->factors) {
    if (!op && f->kind == AtomKind::Op)
      op = f;
    else
      rest.push_back(f);
  }
  return {op, std::move(rest)};
}

}  // namespace

LinComb Engine::com_product(const WordPtr& u, const WordPtr& v) {
  tick();
  if (u->op_count + v->op_count <= 1)
    return LinComb::term(mul_monomials(u, v));

  std::pair<WordPtr, WordPtr> key =
      cmp_word(u, v) >= 0 ? std::make_pair(u, v) : std::make_pair(v, u);
  {
    std::lock_guard<std::mutex> lk(memo_mu_);
    auto it = product_memo_.find(key);
    if (it != product_memo_.end()) return it->second;
  }

  auto [opu, restu] = split_op(u);
  auto [opv, restv] = split_op(v);
  const WordPtr& s1 = opu->op_arg;
  const WordPtr& s2 = opv->op_arg;

  LinComb inner;
  if (cfg_.strategy == Strategy::LeftFirst) {
    inner = com_product(word_of(opu), s2);
    inner += com_product(s1, word_of(opv));
  } else {
    inner = com_product(s1, word_of(opv));
    inner += com_product(word_of(opu), s2);
  }
  LinComb s1s2 = com_product(s1, s2);
  if (cfg_.law.is_ns())
    inner -= op_apply(s1s2);
  else
    inner += s1s2.scaled(cfg_.law.weight);

  std::vector<AtomPtr> outer;
  outer.insert(outer.end(), restu.begin(), restu.end());
  outer.insert(outer.end(), restv.begin(), restv.end());

  LinComb r;
  for (const auto& [w, c] : inner) {
    std::vector<AtomPtr> fs = outer;
    fs.push_back(make_op(w));
    r.add(make_word(std::move(fs)), c);
  }

  std::lock_guard<std::mutex> lk(memo_mu_);
  product_memo_.emplace(key, r);
  return r;
}

LinComb Engine::com_product(const LinComb& x, const LinComb& y) {
  LinComb r;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) r += com_product(wx, wy).scaled(cx * cy);
  return r;
}

LinComb Engine::bracket(const WordPtr& u, const WordPtr& v) {
  tick();
  int c = cmp_word(u, v);
  if (c == 0) return {};
  if (c < 0) return -bracket(v, u);

  std::pair<WordPtr, WordPtr> key(u, v);
  {
    std::lock_guard<std::mutex> lk(memo_mu_);
    auto it = bracket_memo_.find(key);
    if (it != bracket_memo_.end()) return it->second;
  }

  LinComb out;
  for (std::size_t i = 0; i < u->factors.size(); ++i) {
    for (std::size_t j = 0; j < v->factors.size(); ++j) {
      LinComb ab = bracket_atoms(u->factors[i], v->factors[j]);
      if (ab.is_zero()) continue;
      WordPtr ru = word_erase(u, i);
      WordPtr rv = word_erase(v, j);
      LinComb rest;
      if (ru && rv)
        rest = com_product(ru, rv);
      else if (ru)
        rest = LinComb::term(ru);
      else if (rv)
        rest = LinComb::term(rv);
      else {
        out += ab;
        continue;
      }
      out += com_product(ab, rest);
    }
  }

  std::lock_guard<std::mutex> lk(memo_mu_);
  bracket_memo_.emplace(key, out);
  return out;
}

LinComb Engine::bracket(const LinComb& x, const LinComb& y) {
  LinComb r;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) r += bracket(wx, wy).scaled(cx * cy);
  return r;
}

// [R(c), R(d)] = R([R(c),d] + [c,R(d)] + <weight term>), the weight term
// being lambda[c,d] for Rota-Baxter and -R([c,d]) for Nijenhuis. Used for
// every operator-operator pair except the mixed expressible case.
LinComb Engine::op_pair_expand(const AtomPtr& a, const AtomPtr& b) {
  const WordPtr& c = a->op_arg;
  const WordPtr& d = b->op_arg;
  LinComb inner;
  if (cfg_.strategy == Strategy::LeftFirst) {
    inner = bracket(word_of(a), d);
    inner += bracket(c, word_of(b));
  } else {
    inner = bracket(c, word_of(b));
    inner += bracket(word_of(a), d);
  }
  LinComb cd = bracket(c, d);
  if (cfg_.law.is_ns())
    inner -= op_apply(cd);
  else
    inner += cd.scaled(cfg_.law.weight);
  return op_apply(inner);
}

// a is an expressible operator atom with witness k*a = leading(R(e)R(f)),
// b is not expressible. Rewrites k[a,b] through the witness:
//   k[a,b] = [R(e),b]R(f) + [R(f),b]R(e) - [R(e)R(f) - k*a, b].
LinComb Engine::expressible_case(const AtomPtr& a, const AtomPtr& b) {
  const ExpressWitness* wit = witness(a);
  if (!wit) throw domain_error("expressible_case on a non-expressible atom");
  WordPtr re = word_of(make_op(wit->a));
  WordPtr rf = word_of(make_op(wit->b));
  WordPtr bw = word_of(b);
  Rational inv_k(1, wit->k);
  LinComb out;
  if (cfg_.strategy == Strategy::LeftFirst) {
    out = com_product(bracket(re, bw), LinComb::term(rf));
    out += com_product(bracket(rf, bw), LinComb::term(re));
  } else {
    out = com_product(bracket(rf, bw), LinComb::term(re));
    out += com_product(bracket(re, bw), LinComb::term(rf));
  }
  // residual = k*a - R(e)R(f); [residual, b] enters with +.
  out += bracket(wit->residual, LinComb::term(bw));
  return out.scaled(inv_k);
}

LinComb Engine::bracket_atoms(const AtomPtr& a, const AtomPtr& b) {
  tick();
  if (eq_atom(a, b)) return {};
  const bool ar = a->kind == AtomKind::Op;
  const bool br = b->kind == AtomKind::Op;
  const bool aw = ar && is_expressible(a);
  const bool bw = br && is_expressible(b);
  if (ar && br) {
    if (aw && !bw) return expressible_case(a, b);
    if (!aw && bw) return -expressible_case(b, a);
    return op_pair_expand(a, b);  // both expressible or both not
  }
  if (aw) return expressible_case(a, b);
  if (bw) return -expressible_case(b, a);
  return lie_mul(a->kind == AtomKind::Lie ? a->lie : lie_leaf(a),
                 b->kind == AtomKind::Lie ? b->lie : lie_leaf(b));
}

void Engine::validate_word(const WordPtr& w) {
  if (w->factors.empty()) throw domain_error("validate: empty word");
  int ops = 0;
  for (std::size_t i = 0; i + 1 < w->factors.size(); ++i)
    if (cmp_atom(w->factors[i], w->factors[i + 1]) < 0)
      throw domain_error("validate: factors not sorted descending in " +
                         word_to_text(w, opsym()));
  for (const auto& f : w->factors) {
    switch (f->kind) {
      case AtomKind::Gen:
        break;
      case AtomKind::Op:
        ++ops;
        validate_word(f->op_arg);
        break;
      case AtomKind::Lie:
        if (f->lie->leaves < 2)
          throw domain_error("validate: Lie factor of length < 2");
        if (!is_canonical_lie(f->lie))
          throw domain_error("validate: non-canonical Lie factor " +
                             lie_to_text(f->lie, opsym()));
        break;
    }
  }
  if (ops > 1)
    throw domain_error("validate: more than one outer operator letter in " +
                       word_to_text(w, opsym()));
}

void Engine::validate(const LinComb& c) {
  for (const auto& [w, k] : c) {
    if (k == 0) throw domain_error("validate: stored zero coefficient");
    validate_word(w);
  }
}

// Minimal construction depth: generators and R(generator) atoms sit at
// depth 1; a Lie word sits at the maximal depth of its operator leaves; an
// operator atom over a word of depth n sits at depth n + 1 (except the
// R(generator) seed); a word sits at the maximum over its factors.
int Engine::stratum(const WordPtr& w) {
  int s = 1;
  for (const auto& f : w->factors) {
    int fs = 1;
    switch (f->kind) {
      case AtomKind::Gen:
        fs = 1;
        break;
      case AtomKind::Op:
        if (f->op_arg->factors.size() == 1 &&
            f->op_arg->factors[0]->kind == AtomKind::Gen)
          fs = 1;
        else
          fs = stratum(f->op_arg) + 1;
        break;
      case AtomKind::Lie: {
        std::vector<AtomPtr> leaves;
        std::vector<LiePtr> stack{f->lie};
        while (!stack.empty()) {
          LiePtr t = stack.back();
          stack.pop_back();
          if (t->is_leaf())
            leaves.push_back(t->atom);
          else {
            stack.push_back(t->left);
            stack.push_back(t->right);
          }
        }
        fs = 1;
        for (const auto& lf : leaves)
          if (lf->kind == AtomKind::Op)
            fs = std::max(fs, stratum(word_of(lf)));
        break;
      }
    }
    s = std::max(s, fs);
  }
  return s;
}

std::string Engine::to_text(const LinComb& c) const {
  if (c.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, k] : c) {
    Rational a = k;
    if (first) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) s += rational_to_string(a) + "*";
    s += word_to_text(w, opsym());
    first = false;
  }
  return s;
}

std::string Engine::to_json(const LinComb& c) const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, k] : c)
    terms.push_back(nlohmann::json{{"coeff", rational_to_string(k)},
                                   {"word", word_json_obj(w, opsym())}});
  nlohmann::json j{{"schema", "prb-lincomb/1"},
                   {"operator", std::string(1, opsym())},
                   {"terms", terms}};
  if (!cfg_.law.is_ns()) j["weight"] = rational_to_string(cfg_.law.weight);
  return j.dump();
}

}  // namespace prb
