#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "scalar.hpp"

namespace prb {

// Generators are compared by rank only; the symbol is for printing. Two
// generators with equal rank but different symbols belong to different
// generator universes and may not be mixed.
struct GeneratorId {
  std::string symbol;
  std::uint32_t rank = 0;
};

class Atom;
class Word;
struct LieTree;
using AtomPtr = std::shared_ptr<const Atom>;
using WordPtr = std::shared_ptr<const Word>;
using LiePtr = std::shared_ptr<const LieTree>;

// Binary bracket tree. A node is a leaf iff `atom` is set; otherwise both
// children are set. Degrees and hash are filled in by the factories.
struct LieTree {
  AtomPtr atom;
  LiePtr left, right;
  int xdeg = 0;
  int rdeg = 0;
  int leaves = 0;
  std::size_t hash = 0;

  bool is_leaf() const { return atom != nullptr; }
};

enum class AtomKind { Gen, Lie, Op };

// A factor of a basis word: a generator, a Lie word of length >= 2 over
// generators and operator atoms, or an operator application R(w) whose
// argument is itself a basis word.
class Atom {
 public:
  AtomKind kind = AtomKind::Gen;
  GeneratorId gen;  // Gen
  LiePtr lie;       // Lie, internal node with >= 2 leaves
  WordPtr op_arg;   // Op
  int xdeg = 0;
  int rdeg = 0;
  std::size_t hash = 0;
};

// A basis word: a nonempty commutative monomial over atoms, stored with
// factors sorted descending in the term order. At most one factor is an
// operator atom; Lie factors may contain nested operator atoms without
// counting toward that bound.
class Word {
 public:
  std::vector<AtomPtr> factors;
  int xdeg = 0;
  int rdeg = 0;
  int op_count = 0;  // operator atoms among the factors
  std::size_t hash = 0;

  const AtomPtr* op_factor() const;  // null when op_count == 0
};

AtomPtr make_gen(std::string symbol, std::uint32_t rank);
LiePtr lie_leaf(AtomPtr a);
LiePtr lie_node(LiePtr l, LiePtr r);
AtomPtr make_lie(LiePtr t);  // t must be an internal node
AtomPtr make_op(WordPtr arg);
AtomPtr atom_of_lie(const LiePtr& t);  // leaf -> its atom, node -> make_lie
WordPtr make_word(std::vector<AtomPtr> factors);  // sorts, validates nonempty
WordPtr word_of(AtomPtr a);
WordPtr word_erase(const WordPtr& w, std::size_t index);  // may return null

// Term order
// ----------
// All comparisons return <0, 0, >0 and implement one strict total order:
//   1. total generator degree (xdeg), smaller first;
//   2. total operator degree (rdeg, counting every nesting level);
//   3. structure:
//      - atoms: kind rank generator < Lie word < operator atom, then
//        generators by rank, operator atoms by recursive comparison of
//        their arguments, Lie words by leaf sequence and then by shape;
//      - words: factor count (more factors ranks higher), then factor
//        lists (sorted descending) lexicographically.
// The order restricted to generators versus operator letters satisfies
// x < R(u) for every x and R(u) < R(v) iff u < v.
int cmp_atom(const AtomPtr& a, const AtomPtr& b);
int cmp_lie(const LiePtr& a, const LiePtr& b);
int cmp_word(const WordPtr& a, const WordPtr& b);

bool eq_atom(const AtomPtr& a, const AtomPtr& b);
bool eq_lie(const LiePtr& a, const LiePtr& b);
bool eq_word(const WordPtr& a, const WordPtr& b);

// Canonical text forms; `opsym` is 'R' or 'N'.
std::string atom_to_text(const AtomPtr& a, char opsym);
std::string lie_to_text(const LiePtr& t, char opsym);
std::string word_to_text(const WordPtr& w, char opsym);

// JSON forms: word = {"factors":[atom...]}, atom = {"kind","payload"}.
std::string word_to_json(const WordPtr& w, char opsym);

struct WordHash {
  std::size_t operator()(const WordPtr& w) const { return w->hash; }
};
struct WordEq {
  bool operator()(const WordPtr& a, const WordPtr& b) const {
    return eq_word(a, b);
  }
};

}  // namespace prb
