#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lincomb.hpp"
#include "scalar.hpp"
#include "term.hpp"

namespace prb {

// Two evaluation orders for the same rewriting; canonical results must not
// depend on the choice (probed by the confluence suite).
enum class Strategy { LeftFirst, RightFirst };

struct ExpressWitness {
  std::uint64_t k = 0;
  WordPtr a, b;      // leading(R(a) * R(b)) = k * R(arg)
  LinComb residual;  // k * R(arg) - R(a) * R(b)
};

// Rank over Q of the span of the given combinations.
int span_rank(const std::vector<LinComb>& vectors);

// The free Poisson algebra with a Rota-Baxter operator of fixed weight, or
// with a Nijenhuis operator, over a ranked generator set. Elements are
// linear combinations of canonical basis words; all operations return
// canonical forms. Instances are safe to share across threads: the memo
// caches are mutex-guarded and results do not depend on cache state.
class Engine {
 public:
  struct Config {
    OpLaw law;
    std::vector<std::string> generators;  // ranked by position
    std::uint64_t fuel_cap = 500'000'000;
    Strategy strategy = Strategy::LeftFirst;
  };

  explicit Engine(Config cfg);

  const OpLaw& law() const { return cfg_.law; }
  const std::vector<std::string>& generators() const { return cfg_.generators; }
  char opsym() const { return cfg_.law.symbol(); }
  Strategy strategy() const { return cfg_.strategy; }

  AtomPtr gen_atom(std::string_view symbol) const;
  WordPtr gen_word(std::string_view symbol) const;

  // Commutative product, Poisson bracket and operator application; each is
  // the bilinear (resp. linear) extension of the word-level operation.
  LinComb com_product(const WordPtr& u, const WordPtr& v);
  LinComb com_product(const LinComb& x, const LinComb& y);
  LinComb bracket(const WordPtr& u, const WordPtr& v);
  LinComb bracket(const LinComb& x, const LinComb& y);
  LinComb op_apply(const LinComb& x);
  LinComb op_apply_word(const WordPtr& w);

  // Lie layer: normalize a raw bracket tree (leaves are atoms, no canonical
  // shape assumed) into a combination of basis words.
  LinComb lie_normalize(const LiePtr& raw);
  LinComb lie_bracket(const LiePtr& u, const LiePtr& v);

  // Expressibility of the operator atom R(arg); memoized per argument word.
  bool is_expressible(const AtomPtr& op_atom);
  // Null when not expressible. The pointer stays valid for the engine's
  // lifetime.
  const ExpressWitness* witness(const AtomPtr& op_atom);

  // Structural validation of the basis-word invariants; throws domain_error
  // with a description when violated.
  void validate(const LinComb& c);
  void validate_word(const WordPtr& w);
  bool is_canonical_lie(const LiePtr& t);

  int stratum(const WordPtr& w);

  // All basis words with xdeg in [1, max_xdeg] and rdeg in [0, max_rdeg];
  // with `multilinear`, only words using every generator exactly once.
  std::vector<WordPtr> enumerate_basis(int max_xdeg, int max_rdeg,
                                       bool multilinear);

  // Rank over Q of the span of all multilinear compositions of
  // a o b = R(a)b and a ? b = [R(a), b] on the first n generators.
  int pre_post_span_dim(int n, int rdeg_cap);

  void reset_fuel() { fuel_used_.store(0); }
  std::uint64_t fuel_used() const { return fuel_used_.load(); }
  void set_fuel_cap(std::uint64_t cap) { cfg_.fuel_cap = cap; }
  void set_strategy(Strategy s) { cfg_.strategy = s; }

  std::string to_text(const LinComb& c) const;
  std::string to_json(const LinComb& c) const;

 private:
  friend struct EngineExpress;

  void tick();
  LinComb bracket_atoms(const AtomPtr& a, const AtomPtr& b);
  LinComb op_pair_expand(const AtomPtr& a, const AtomPtr& b);
  LinComb expressible_case(const AtomPtr& a, const AtomPtr& b);
  LinComb lie_mul(const LiePtr& u, const LiePtr& v);
  LinComb decorate(const AtomPtr& p, const LiePtr& v);
  const std::optional<ExpressWitness>& witness_slot(const WordPtr& arg);

  // enumeration helpers (enumerate.cpp)
  struct EnumCache;
  std::vector<AtomPtr> enum_atoms(EnumCache& ec, int x, int r);
  std::vector<LiePtr> enum_lie(EnumCache& ec, int x, int r);
  std::vector<WordPtr> enum_words(EnumCache& ec, int x, int r);

  Config cfg_;
  std::vector<AtomPtr> gen_atoms_;
  std::atomic<std::uint64_t> fuel_used_{0};

  std::mutex memo_mu_;
  struct PairHash {
    std::size_t operator()(const std::pair<WordPtr, WordPtr>& p) const {
      return p.first->hash * 1099511628211ULL ^ p.second->hash;
    }
  };
  struct PairEq {
    bool operator()(const std::pair<WordPtr, WordPtr>& a,
                    const std::pair<WordPtr, WordPtr>& b) const {
      return eq_word(a.first, b.first) && eq_word(a.second, b.second);
    }
  };
  std::unordered_map<std::pair<WordPtr, WordPtr>, LinComb, PairHash, PairEq>
      product_memo_;
  std::unordered_map<std::pair<WordPtr, WordPtr>, LinComb, PairHash, PairEq>
      bracket_memo_;
  // unordered_map references are stable across inserts
  std::unordered_map<WordPtr, std::optional<ExpressWitness>, WordHash, WordEq>
      express_memo_;
};

}  // namespace prb
