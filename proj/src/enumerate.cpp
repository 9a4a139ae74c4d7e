#include <map>

#include "engine.hpp"

namespace prb {

struct Engine::EnumCache {
  std::map<std::pair<int, int>, std::vector<AtomPtr>> atoms;
  std::map<std::pair<int, int>, std::vector<LiePtr>> lies;
  std::map<std::pair<int, int>, std::vector<WordPtr>> words;
  std::size_t produced = 0;
  std::size_t cap = 0;

  void count(std::size_t n) {
    produced += n;
    if (produced > cap)
      throw resource_error("enumeration exceeds the resource cap");
  }
};

namespace {

bool en_gen_leaf(const LiePtr& t) {
  return t->is_leaf() && t->atom->kind == AtomKind::Gen;
}
bool en_chain(const LiePtr& t) {
  return !t->is_leaf() && t->left->is_leaf() &&
         t->left->atom->kind == AtomKind::Op;
}

}  // namespace

// Canonical decorated-letter words of exact degrees (x, r): generator
// leaves, decoration chains and Hall nodes.
std::vector<LiePtr> Engine::enum_lie(EnumCache& ec, int x, int r) {
  auto key = std::make_pair(x, r);
  if (auto it = ec.lies.find(key); it != ec.lies.end()) return it->second;
  std::vector<LiePtr> out;
  if (x == 1 && r == 0)
    for (const auto& g : gen_atoms_) out.push_back(lie_leaf(g));
  // decoration chains [p, c], decorations weakly ascending outward
  for (int xp = 1; xp <= x - 1; ++xp)
    for (int rp = 1; rp <= r; ++rp) {
      int xc = x - xp, rc = r - rp;
      for (const auto& pa : enum_atoms(ec, xp, rp)) {
        if (pa->kind != AtomKind::Op || is_expressible(pa)) continue;
        for (const auto& c : enum_lie(ec, xc, rc)) {
          if (!en_gen_leaf(c) && !en_chain(c)) continue;
          if (en_chain(c) && cmp_atom(c->left->atom, pa) > 0) continue;
          out.push_back(lie_node(lie_leaf(pa), c));
          ec.count(1);
        }
      }
    }
  // Hall nodes over decorated letters
  for (int xl = 1; xl <= x - 1; ++xl) {
    int xr = x - xl;
    for (int rl = 0; rl <= r; ++rl) {
      int rr = r - rl;
      for (const auto& l : enum_lie(ec, xl, rl)) {
        for (const auto& rt : enum_lie(ec, xr, rr)) {
          if (cmp_lie(l, rt) >= 0) continue;
          if (!rt->is_leaf() && !en_chain(rt) && cmp_lie(rt->left, l) > 0)
            continue;
          out.push_back(lie_node(l, rt));
          ec.count(1);
        }
      }
    }
  }
  ec.lies.emplace(key, out);
  return out;
}

std::vector<AtomPtr> Engine::enum_atoms(EnumCache& ec, int x, int r) {
  auto key = std::make_pair(x, r);
  if (auto it = ec.atoms.find(key); it != ec.atoms.end()) return it->second;
  std::vector<AtomPtr> out;
  if (x == 1 && r == 0)
    for (const auto& g : gen_atoms_) out.push_back(g);
  if (r >= 1)
    for (const auto& w : enum_words(ec, x, r - 1)) out.push_back(make_op(w));
  // Lie atoms: decorated-letter words with at least two leaves
  for (const auto& t : enum_lie(ec, x, r))
    if (!t->is_leaf()) out.push_back(make_lie(t));
  ec.atoms.emplace(key, out);
  ec.count(out.size());
  return out;
}

std::vector<WordPtr> Engine::enum_words(EnumCache& ec, int x, int r) {
  auto key = std::make_pair(x, r);
  if (auto it = ec.words.find(key); it != ec.words.end()) return it->second;
  // pool of atoms with degrees at most (x, r), sorted descending
  std::vector<AtomPtr> pool;
  for (int xa = 1; xa <= x; ++xa)
    for (int ra = 0; ra <= r; ++ra)
      for (const auto& a : enum_atoms(ec, xa, ra)) pool.push_back(a);
  std::sort(pool.begin(), pool.end(),
            [](const AtomPtr& a, const AtomPtr& b) { return cmp_atom(a, b) > 0; });
  std::vector<WordPtr> out;
  std::vector<AtomPtr> cur;
  // multisets over the pool with exact degree sums and at most one operator
  auto rec = [&](auto&& self, std::size_t i, int xs, int rs, int ops) -> void {
    if (xs == x && rs == r && !cur.empty()) {
      out.push_back(make_word(cur));
      ec.count(1);
    }
    for (std::size_t j = i; j < pool.size(); ++j) {
      const auto& a = pool[j];
      if (xs + a->xdeg > x || rs + a->rdeg > r) continue;
      if (a->kind == AtomKind::Op && ops == 1) continue;
      cur.push_back(a);
      self(self, j, xs + a->xdeg, rs + a->rdeg,
           ops + (a->kind == AtomKind::Op ? 1 : 0));
      cur.pop_back();
    }
  };
  rec(rec, 0, 0, 0, 0);
  ec.words.emplace(key, out);
  return out;
}

namespace {

void gen_multiset(const AtomPtr& a, std::map<std::uint32_t, int>& m);

void gen_multiset_lie(const LiePtr& t, std::map<std::uint32_t, int>& m) {
  if (t->is_leaf()) {
    gen_multiset(t->atom, m);
    return;
  }
  gen_multiset_lie(t->left, m);
  gen_multiset_lie(t->right, m);
}

void gen_multiset(const AtomPtr& a, std::map<std::uint32_t, int>& m) {
  switch (a->kind) {
    case AtomKind::Gen:
      ++m[a->gen.rank];
      break;
    case AtomKind::Lie:
      gen_multiset_lie(a->lie, m);
      break;
    case AtomKind::Op:
      for (const auto& f : a->op_arg->factors) gen_multiset(f, m);
      break;
  }
}

}  // namespace

std::vector<WordPtr> Engine::enumerate_basis(int max_xdeg, int max_rdeg,
                                             bool multilinear) {
  if (max_xdeg < 1 || max_rdeg < 0) throw domain_error("empty degree bounds");
  if (max_xdeg > 6 || max_rdeg > 4)
    throw resource_error("enumeration bounds too large (xdeg <= 6, rdeg <= 4)");
  EnumCache ec;
  ec.cap = 500'000;
  std::vector<WordPtr> out;
  for (int x = 1; x <= max_xdeg; ++x)
    for (int r = 0; r <= max_rdeg; ++r)
      for (const auto& w : enum_words(ec, x, r)) out.push_back(w);
  if (multilinear) {
    const int n = static_cast<int>(gen_atoms_.size());
    std::vector<WordPtr> ml;
    for (const auto& w : out) {
      if (w->xdeg != n) continue;
      std::map<std::uint32_t, int> m;
      for (const auto& f : w->factors) gen_multiset(f, m);
      bool ok = static_cast<int>(m.size()) == n;
      for (const auto& [rk, c] : m) ok = ok && c == 1;
      if (ok) ml.push_back(w);
    }
    out = std::move(ml);
  }
  std::sort(out.begin(), out.end(),
            [](const WordPtr& a, const WordPtr& b) { return cmp_word(a, b) < 0; });
  return out;
}

int Engine::pre_post_span_dim(int n, int rdeg_cap) {
  if (n < 1) throw domain_error("span dimension needs n >= 1");
  if (n > 3) throw resource_error("span enumeration capped at n <= 3");
  if (n - 1 > rdeg_cap)
    throw resource_error("rdeg cap too small: compositions reach operator degree " +
                         std::to_string(n - 1));
  // expressions over each subset of the generators, every generator once
  std::map<std::uint32_t, std::vector<LinComb>> table;  // bitmask -> span
  for (int i = 0; i < n; ++i)
    table[1u << i] = {LinComb::term(word_of(gen_atoms_[i]))};
  auto circ = [&](const LinComb& a, const LinComb& b) {
    return com_product(op_apply(a), b);
  };
  auto star = [&](const LinComb& a, const LinComb& b) {
    return bracket(op_apply(a), b);
  };
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (table.count(mask)) continue;
    std::vector<LinComb> exprs;
    for (std::uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
      std::uint32_t rest = mask & ~sub;
      if (!table.count(sub) || !table.count(rest)) continue;
      for (const auto& a : table[sub])
        for (const auto& b : table[rest]) {
          exprs.push_back(circ(a, b));
          exprs.push_back(star(a, b));
        }
    }
    table[mask] = std::move(exprs);
  }
  return span_rank(table[full]);
}

// Rank over Q: eliminate each vector against pivot rows keyed by leading
// word; each subtraction strictly lowers the leading word, so this is plain
// fraction-free-in-spirit Gaussian elimination on sparse rows.
int span_rank(const std::vector<LinComb>& vectors) {
  struct Less {
    bool operator()(const WordPtr& a, const WordPtr& b) const {
      return cmp_word(a, b) < 0;
    }
  };
  std::map<WordPtr, LinComb, Less> pivots;
  for (const auto& e : vectors) {
    LinComb v = e;
    while (!v.is_zero()) {
      const auto& [lw, lc] = v.leading();
      auto it = pivots.find(lw);
      if (it == pivots.end()) {
        pivots.emplace(lw, v);
        break;
      }
      v -= it->second.scaled(lc / it->second.leading().second);
    }
  }
  return static_cast<int>(pivots.size());
}

}  // namespace prb
