#include "term.hpp"

#include <algorithm>

#include "json.hpp"

namespace prb {

namespace {

inline std::size_t mix(std::size_t seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

inline int cmp_int(long a, long b) { return a < b ? -1 : (a > b ? 1 : 0); }

int kind_rank(AtomKind k) {
  switch (k) {
    case AtomKind::Gen:
      return 0;
    case AtomKind::Lie:
      return 1;
    case AtomKind::Op:
      return 2;
  }
  return 0;
}

void collect_leaves(const LiePtr& t, std::vector<AtomPtr>& out) {
  if (t->is_leaf()) {
    out.push_back(t->atom);
    return;
  }
  collect_leaves(t->left, out);
  collect_leaves(t->right, out);
}

// Shape-only tiebreak once degrees and leaf sequences agree: a leaf sorts
// below an internal node, internal nodes compare left then right.
int cmp_shape(const LiePtr& a, const LiePtr& b) {
  if (a->is_leaf() && b->is_leaf()) return cmp_atom(a->atom, b->atom);
  if (a->is_leaf()) return -1;
  if (b->is_leaf()) return 1;
  if (int c = cmp_shape(a->left, b->left)) return c;
  return cmp_shape(a->right, b->right);
}

}  // namespace

const AtomPtr* Word::op_factor() const {
  for (const auto& f : factors)
    if (f->kind == AtomKind::Op) return &f;
  return nullptr;
}

AtomPtr make_gen(std::string symbol, std::uint32_t rank) {
  auto a = std::make_shared<Atom>();
  a->kind = AtomKind::Gen;
  a->gen = GeneratorId{std::move(symbol), rank};
  a->xdeg = 1;
  a->rdeg = 0;
  a->hash = mix(mix(0x67656eULL, rank), std::hash<std::string>{}(a->gen.symbol));
  return a;
}

LiePtr lie_leaf(AtomPtr a) {
  auto t = std::make_shared<LieTree>();
  t->xdeg = a->xdeg;
  t->rdeg = a->rdeg;
  t->leaves = 1;
  t->hash = mix(0x6c656166ULL, a->hash);
  t->atom = std::move(a);
  return t;
}

LiePtr lie_node(LiePtr l, LiePtr r) {
  auto t = std::make_shared<LieTree>();
  t->xdeg = l->xdeg + r->xdeg;
  t->rdeg = l->rdeg + r->rdeg;
  t->leaves = l->leaves + r->leaves;
  t->hash = mix(mix(0x6e6f6465ULL, l->hash), r->hash);
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

AtomPtr make_lie(LiePtr t) {
  if (t->is_leaf()) throw domain_error("Lie atom requires length >= 2");
  auto a = std::make_shared<Atom>();
  a->kind = AtomKind::Lie;
  a->xdeg = t->xdeg;
  a->rdeg = t->rdeg;
  a->hash = mix(0x6c6965ULL, t->hash);
  a->lie = std::move(t);
  return a;
}

AtomPtr make_op(WordPtr arg) {
  auto a = std::make_shared<Atom>();
  a->kind = AtomKind::Op;
  a->xdeg = arg->xdeg;
  a->rdeg = arg->rdeg + 1;
  a->hash = mix(0x6f70ULL, arg->hash);
  a->op_arg = std::move(arg);
  return a;
}

AtomPtr atom_of_lie(const LiePtr& t) {
  return t->is_leaf() ? t->atom : make_lie(t);
}

WordPtr make_word(std::vector<AtomPtr> factors) {
  if (factors.empty()) throw domain_error("empty word");
  std::sort(factors.begin(), factors.end(),
            [](const AtomPtr& a, const AtomPtr& b) { return cmp_atom(a, b) > 0; });
  auto w = std::make_shared<Word>();
  std::size_t h = 0x776f7264ULL;
  for (const auto& f : factors) {
    w->xdeg += f->xdeg;
    w->rdeg += f->rdeg;
    if (f->kind == AtomKind::Op) ++w->op_count;
    h = mix(h, f->hash);
  }
  if (w->op_count > 1)
    throw domain_error("word with more than one operator factor");
  w->hash = h;
  w->factors = std::move(factors);
  return w;
}

WordPtr word_of(AtomPtr a) { return make_word({std::move(a)}); }

WordPtr word_erase(const WordPtr& w, std::size_t index) {
  if (w->factors.size() == 1) return nullptr;
  std::vector<AtomPtr> fs;
  fs.reserve(w->factors.size() - 1);
  for (std::size_t i = 0; i < w->factors.size(); ++i)
    if (i != index) fs.push_back(w->factors[i]);
  return make_word(std::move(fs));
}

int cmp_atom(const AtomPtr& a, const AtomPtr& b) {
  if (a.get() == b.get()) return 0;
  if (int c = cmp_int(a->xdeg, b->xdeg)) return c;
  if (int c = cmp_int(a->rdeg, b->rdeg)) return c;
  if (int c = cmp_int(kind_rank(a->kind), kind_rank(b->kind))) return c;
  switch (a->kind) {
    case AtomKind::Gen: {
      if (int c = cmp_int(a->gen.rank, b->gen.rank)) return c;
      if (a->gen.symbol != b->gen.symbol)
        throw domain_error("mixed generator universes: rank collision between '" +
                           a->gen.symbol + "' and '" + b->gen.symbol + "'");
      return 0;
    }
    case AtomKind::Op:
      return cmp_word(a->op_arg, b->op_arg);
    case AtomKind::Lie:
      return cmp_lie(a->lie, b->lie);
  }
  return 0;
}

int cmp_lie(const LiePtr& a, const LiePtr& b) {
  if (a.get() == b.get()) return 0;
  if (int c = cmp_int(a->xdeg, b->xdeg)) return c;
  if (int c = cmp_int(a->rdeg, b->rdeg)) return c;
  std::vector<AtomPtr> la, lb;
  collect_leaves(a, la);
  collect_leaves(b, lb);
  std::size_t n = std::min(la.size(), lb.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = cmp_atom(la[i], lb[i])) return c;
  if (int c = cmp_int(la.size(), lb.size())) return c;
  return cmp_shape(a, b);
}

int cmp_word(const WordPtr& a, const WordPtr& b) {
  if (a.get() == b.get()) return 0;
  if (int c = cmp_int(a->xdeg, b->xdeg)) return c;
  if (int c = cmp_int(a->rdeg, b->rdeg)) return c;
  // More factors rank higher: at equal degrees, words keeping letters at the
  // outer level dominate words with everything buried under one operator.
  if (int c = cmp_int(a->factors.size(), b->factors.size())) return c;
  for (std::size_t i = 0; i < a->factors.size(); ++i)
    if (int c = cmp_atom(a->factors[i], b->factors[i])) return c;
  return 0;
}

bool eq_atom(const AtomPtr& a, const AtomPtr& b) {
  return a.get() == b.get() || (a->hash == b->hash && cmp_atom(a, b) == 0);
}
bool eq_lie(const LiePtr& a, const LiePtr& b) {
  return a.get() == b.get() || (a->hash == b->hash && cmp_lie(a, b) == 0);
}
bool eq_word(const WordPtr& a, const WordPtr& b) {
  return a.get() == b.get() || (a->hash == b->hash && cmp_word(a, b) == 0);
}

std::string atom_to_text(const AtomPtr& a, char opsym) {
  switch (a->kind) {
    case AtomKind::Gen:
      return a->gen.symbol;
    case AtomKind::Op:
      return std::string(1, opsym) + "(" + word_to_text(a->op_arg, opsym) + ")";
    case AtomKind::Lie:
      return lie_to_text(a->lie, opsym);
  }
  return {};
}

std::string lie_to_text(const LiePtr& t, char opsym) {
  if (t->is_leaf()) return atom_to_text(t->atom, opsym);
  return "[" + lie_to_text(t->left, opsym) + "," + lie_to_text(t->right, opsym) +
         "]";
}

std::string word_to_text(const WordPtr& w, char opsym) {
  std::string s;
  for (std::size_t i = 0; i < w->factors.size(); ++i) {
    if (i) s += "*";
    s += atom_to_text(w->factors[i], opsym);
  }
  return s;
}

namespace {

nlohmann::json atom_json(const AtomPtr& a, char opsym);
nlohmann::json word_json(const WordPtr& w, char opsym);

nlohmann::json lie_json(const LiePtr& t, char opsym) {
  if (t->is_leaf()) return atom_json(t->atom, opsym);
  return nlohmann::json{
      {"bracket", {lie_json(t->left, opsym), lie_json(t->right, opsym)}}};
}

nlohmann::json atom_json(const AtomPtr& a, char opsym) {
  switch (a->kind) {
    case AtomKind::Gen:
      return nlohmann::json{{"kind", "gen"}, {"payload", a->gen.symbol}};
    case AtomKind::Op:
      return nlohmann::json{{"kind", std::string(1, opsym)},
                            {"payload", word_json(a->op_arg, opsym)}};
    case AtomKind::Lie:
      return nlohmann::json{{"kind", "lie"}, {"payload", lie_json(a->lie, opsym)}};
  }
  return {};
}

nlohmann::json word_json(const WordPtr& w, char opsym) {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : w->factors) fs.push_back(atom_json(f, opsym));
  return nlohmann::json{{"factors", fs}};
}

}  // namespace

nlohmann::json word_json_obj(const WordPtr& w, char opsym) {
  return word_json(w, opsym);
}

std::string word_to_json(const WordPtr& w, char opsym) {
  return word_json(w, opsym).dump();
}

}  // namespace prb
