#include "engine.hpp"
#include "rbcom.hpp"

namespace prb {

namespace {

// The expressibility predicate runs in the free commutative operator algebra
// over the non-operator atoms: basis words map to stacks by peeling the
// operator spine level by level.
struct UTraits {
  static int cmp(const AtomPtr& a, const AtomPtr& b) { return cmp_atom(a, b); }
  static int xdeg(const AtomPtr& a) { return a->xdeg; }
  static int rdeg(const AtomPtr& a) { return a->rdeg; }
  static std::size_t hash(const AtomPtr& a) { return a->hash; }
  static std::string text(const AtomPtr& a) { return atom_to_text(a, 'R'); }
};

using UStack = StackWord<AtomPtr, UTraits>;
using URBCom = RBCom<AtomPtr, UTraits>;

UStack stack_of_word(const WordPtr& w) {
  std::vector<std::vector<AtomPtr>> levels;
  WordPtr cur = w;
  for (;;) {
    AtomPtr op;
    std::vector<AtomPtr> letters;
    for (const auto& f : cur->factors) {
      if (f->kind == AtomKind::Op)
        op = f;
      else
        letters.push_back(f);
    }
    levels.push_back(std::move(letters));
    if (!op) break;
    cur = op->op_arg;
  }
  return UStack::make(std::move(levels));
}

WordPtr word_of_stack(const UStack& s) {
  WordPtr cur;
  for (int j = s.height() - 1; j >= 0; --j) {
    std::vector<AtomPtr> fs = s.levels[j];
    if (cur) fs.push_back(make_op(cur));
    cur = make_word(std::move(fs));
  }
  return cur;
}

}  // namespace

const std::optional<ExpressWitness>& Engine::witness_slot(const WordPtr& arg) {
  {
    std::lock_guard<std::mutex> lk(memo_mu_);
    auto it = express_memo_.find(arg);
    if (it != express_memo_.end()) return it->second;
  }
  URBCom rb(cfg_.law, [this] { tick(); });
  UStack rw = UStack::wrap(stack_of_word(arg));
  auto sw = rb.expressible(rw);
  std::optional<ExpressWitness> conv;
  if (sw) {
    ExpressWitness e;
    e.k = sw->k;
    e.a = word_of_stack(sw->a);
    e.b = word_of_stack(sw->b);
    for (const auto& [t, c] : sw->residual) e.residual.add(word_of_stack(t), c);
    conv = std::move(e);
  }
  std::lock_guard<std::mutex> lk(memo_mu_);
  auto [it, ignored] = express_memo_.try_emplace(arg, std::move(conv));
  return it->second;
}

bool Engine::is_expressible(const AtomPtr& op_atom) {
  if (op_atom->kind != AtomKind::Op)
    throw domain_error("expressibility applies to operator atoms only");
  return witness_slot(op_atom->op_arg).has_value();
}

const ExpressWitness* Engine::witness(const AtomPtr& op_atom) {
  if (op_atom->kind != AtomKind::Op)
    throw domain_error("expressibility applies to operator atoms only");
  const auto& slot = witness_slot(op_atom->op_arg);
  return slot ? &*slot : nullptr;
}

}  // namespace prb
