#include "checks.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "json.hpp"
#include "models.hpp"
#include "parser.hpp"
#include "rbcom.hpp"

namespace prb::checks {

void Report::add(std::string id, bool pass, std::string detail) {
  cases.push_back(Case{std::move(id), pass, std::move(detail)});
}

bool Report::all_pass() const {
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

std::size_t Report::failed() const {
  std::size_t n = 0;
  for (const auto& c : cases)
    if (!c.pass) ++n;
  return n;
}

void Report::sort_by_id() {
  std::stable_sort(cases.begin(), cases.end(),
                   [](const Case& a, const Case& b) { return a.id < b.id; });
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : cases) {
    os << (c.pass ? "pass" : "FAIL") << "  " << c.id;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (all_pass() ? "all passed" : std::to_string(failed()) + " failed")
     << " (" << cases.size() << " cases)\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cases)
    arr.push_back(nlohmann::json{
        {"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
  return nlohmann::json{{"schema", "prb-report/1"},
                        {"pass", all_pass()},
                        {"cases", arr}}
      .dump(2);
}

// ---------------------------------------------------------------------------
// random elements
// ---------------------------------------------------------------------------

namespace {

LinComb random_word_elem(Engine& eng, std::mt19937_64& rng, int xcap,
                         int rcap) {
  const auto& gens = eng.generators();
  if (xcap < 1) throw domain_error("xdeg cap must be >= 1");
  std::uniform_int_distribution<std::size_t> gpick(0, gens.size() - 1);
  // weighted choice among: generator, product, bracket, operator
  for (int attempt = 0; attempt < 8; ++attempt) {
    int choice = static_cast<int>(rng() % 8);
    if (xcap <= 1 && choice != 7) choice = 0;
    if (choice == 7 && rcap < 1) choice = 0;
    LinComb v;
    switch (choice) {
      case 0:
      case 1:
        v = LinComb::term(eng.gen_word(gens[gpick(rng)]));
        break;
      case 2:
      case 3: {
        int xl = 1 + static_cast<int>(rng() % (xcap - 1));
        int rl = static_cast<int>(rng() % (rcap + 1));
        v = eng.com_product(random_word_elem(eng, rng, xl, rl),
                            random_word_elem(eng, rng, xcap - xl, rcap - rl));
        break;
      }
      case 4:
      case 5:
      case 6: {
        int xl = 1 + static_cast<int>(rng() % (xcap - 1));
        int rl = static_cast<int>(rng() % (rcap + 1));
        v = eng.bracket(random_word_elem(eng, rng, xl, rl),
                        random_word_elem(eng, rng, xcap - xl, rcap - rl));
        break;
      }
      case 7:
        v = eng.op_apply(random_word_elem(eng, rng, xcap, rcap - 1));
        break;
    }
    if (!v.is_zero()) return v;
  }
  return LinComb::term(eng.gen_word(gens[gpick(rng)]));
}

}  // namespace

LinComb random_element(Engine& eng, std::mt19937_64& rng, int xdeg_cap,
                       int rdeg_cap, int terms) {
  LinComb v;
  int n = 1 + static_cast<int>(rng() % terms);
  for (int i = 0; i < n; ++i) {
    Rational c(static_cast<long>(rng() % 5) - 2);
    if (c == 0) c = 1;
    v += random_word_elem(eng, rng, xdeg_cap, rdeg_cap).scaled(c);
  }
  if (v.is_zero()) v = random_word_elem(eng, rng, xdeg_cap, rdeg_cap);
  return v;
}

// ---------------------------------------------------------------------------
// free commutative operator algebra suite
// ---------------------------------------------------------------------------

namespace {

using SW = SymStack;
using SLC = SymRBCom::LC;

std::vector<SymLetter> sym_alphabet(int n) {
  std::vector<SymLetter> a;
  const char* names[] = {"x", "y", "z", "t"};
  for (int i = 0; i < n; ++i)
    a.push_back(SymLetter{names[i], static_cast<std::uint32_t>(i)});
  return a;
}

// all stack words over a two-letter alphabet within the degree bounds
std::vector<SW> all_stacks(int max_x, int max_outer_r) {
  auto alpha = sym_alphabet(2);
  std::vector<SW> out;
  // distribute d letters into h slots, innermost nonempty
  for (int d = 1; d <= max_x; ++d)
    for (int h = 1; h <= max_outer_r + 1; ++h) {
      std::vector<std::vector<SymLetter>> lv(h);
      auto rec = [&](auto&& self, int slot, int rem_x, int rem_y) -> void {
        if (slot + 1 == h) {
          for (int i = 0; i < rem_x; ++i) lv[slot].push_back(alpha[0]);
          for (int j = 0; j < rem_y; ++j) lv[slot].push_back(alpha[1]);
          if (!lv[slot].empty()) out.push_back(SW::make(lv));
          lv[slot].clear();
          return;
        }
        for (int i = 0; i <= rem_x; ++i)
          for (int j = 0; j <= rem_y; ++j) {
            for (int q = 0; q < i; ++q) lv[slot].push_back(alpha[0]);
            for (int q = 0; q < j; ++q) lv[slot].push_back(alpha[1]);
            self(self, slot + 1, rem_x - i, rem_y - j);
            lv[slot].clear();
          }
      };
      for (int nx = 0; nx <= d; ++nx) rec(rec, 0, nx, d - nx);
    }
  return out;
}

SW random_stack(std::mt19937_64& rng, int max_x, int max_outer_r) {
  auto alpha = sym_alphabet(2);
  int d = 1 + static_cast<int>(rng() % max_x);
  int h = 1 + static_cast<int>(rng() % (max_outer_r + 1));
  std::vector<std::vector<SymLetter>> lv(h);
  lv[h - 1].push_back(alpha[rng() % 2]);
  for (int i = 1; i < d; ++i)
    lv[rng() % h].push_back(alpha[rng() % 2]);
  return SW::make(std::move(lv));
}

std::vector<int> letter_counts(const SW& w) {
  std::vector<int> c(4, 0);
  for (const auto& m : w.levels)
    for (const auto& l : m) c[l.rank]++;
  return c;
}

}  // namespace

Report run_rbcom_suite(const Bounds& b) {
  Report rep;
  std::mt19937_64 rng(b.seed);
  const std::vector<Rational> lambdas{Rational(0), Rational(1), Rational(-1),
                                      Rational(2)};

  // worked product example: R(x)R(x) = 2 R(R(x)x) + lambda R(x^2)
  for (const auto& lam : lambdas) {
    SymRBCom rb(OpLaw{OpKind::RotaBaxter, lam});
    auto alpha = sym_alphabet(2);
    SW x = SW::monomial({alpha[0]});
    SLC p = rb.product(SW::wrap(x), SW::wrap(x));
    SLC expect = SLC::term(SW::make({{}, {alpha[0]}, {alpha[0]}}), Rational(2));
    expect += SLC::term(SW::make({{}, {alpha[0], alpha[0]}}), lam);
    rep.add("rbcom/worked-example/lambda=" + rational_to_string(lam),
            p == expect);
  }
  // one-step product of distinct letters
  {
    SymRBCom rb(OpLaw{OpKind::RotaBaxter, Rational(1)});
    auto alpha = sym_alphabet(2);
    SW x = SW::monomial({alpha[0]}), y = SW::monomial({alpha[1]});
    SLC p = rb.product(SW::wrap(x), SW::wrap(y));
    SLC expect = SLC::term(SW::make({{}, {alpha[1]}, {alpha[0]}}));
    expect += SLC::term(SW::make({{}, {alpha[0]}, {alpha[1]}}));
    expect += SLC::term(SW::make({{}, {alpha[0], alpha[1]}}));
    rep.add("rbcom/product-rx-ry", p == expect);
    rep.add("rbcom/product-no-op",
            rb.product(x, y) == SLC::term(SW::monomial({alpha[0], alpha[1]})));
  }

  for (const auto& lam : lambdas) {
    SymRBCom rb(OpLaw{OpKind::RotaBaxter, lam});
    const std::string tag = "/lambda=" + rational_to_string(lam);
    bool comm = true, assoc = true, rbid = true, conserve = true;
    std::string detail;
    for (int i = 0; i < b.count && (comm && assoc); ++i) {
      SW u = random_stack(rng, b.xdeg, b.rdeg);
      SW v = random_stack(rng, b.xdeg, b.rdeg);
      SW w = random_stack(rng, b.xdeg, b.rdeg);
      if (!(rb.product(u, v) == rb.product(v, u))) {
        comm = false;
        detail = u.text('R') + " , " + v.text('R');
      }
      SLC uv = rb.product(u, v);
      if (!(rb.product_lc(uv, SLC::term(w)) ==
            rb.product_lc(SLC::term(u), rb.product(v, w)))) {
        assoc = false;
        detail = u.text('R') + " , " + v.text('R') + " , " + w.text('R');
      }
    }
    // operator identity on all bounded pairs
    auto words = all_stacks(std::min(b.xdeg, 3), std::min(b.rdeg, 2));
    for (std::size_t i = 0; i < words.size() && rbid && conserve; ++i)
      for (std::size_t j = i; j < words.size() && rbid; ++j) {
        const SW& u = words[i];
        const SW& v = words[j];
        SLC lhs = rb.product(SW::wrap(u), SW::wrap(v));
        SLC inner = rb.product(SW::wrap(u), v);
        inner += rb.product(u, SW::wrap(v));
        inner += rb.product(u, v).scaled(lam);
        if (!(lhs == SymRBCom::wrap(inner))) {
          rbid = false;
          detail = u.text('R') + " , " + v.text('R');
        }
        auto cu = letter_counts(u), cv = letter_counts(v);
        for (const auto& [t, c] : lhs) {
          auto ct = letter_counts(t);
          for (int q = 0; q < 4; ++q)
            if (ct[q] != cu[q] + cv[q]) conserve = false;
        }
      }
    rep.add("rbcom/commutativity" + tag, comm, comm ? "" : detail);
    rep.add("rbcom/associativity" + tag, assoc, assoc ? "" : detail);
    rep.add("rbcom/operator-identity" + tag, rbid, rbid ? "" : detail);
    rep.add("rbcom/letter-conservation" + tag, conserve);
  }

  // expressibility: frozen examples and soundness
  {
    SymRBCom rb(OpLaw{OpKind::RotaBaxter, Rational(1)});
    auto alpha = sym_alphabet(2);
    SW rrxx = SW::make({{}, {alpha[0]}, {alpha[0]}});
    auto wit = rb.expressible(rrxx);
    SW wx = SW::monomial({alpha[0]});
    rep.add("rbcom/expressible-rrxx",
            wit.has_value() && wit->k == 2 &&
                SymRBCom::Cmp::cmp(wit->a, wx) == 0 &&
                SymRBCom::Cmp::cmp(wit->b, wx) == 0);
    auto rx = SW::make({{}, {alpha[0]}});
    rep.add("rbcom/expressible-rx-none", !rb.expressible(rx).has_value());
    auto rrx = SW::make({{}, {}, {alpha[0]}});
    rep.add("rbcom/expressible-rrx-none", !rb.expressible(rrx).has_value());

    bool sound = true;
    std::string detail;
    int found = 0;
    for (int i = 0; i < b.count && sound; ++i) {
      SW w = random_stack(rng, b.xdeg, b.rdeg);
      if (w.height() < 2 || !w.levels[0].empty()) continue;
      auto wt = rb.expressible(w);
      if (!wt) continue;
      ++found;
      SLC p = rb.product(SW::wrap(wt->a), SW::wrap(wt->b));
      SLC back = SLC::term(w, Rational(wt->k));
      back -= wt->residual;
      if (!(p == back)) {
        sound = false;
        detail = w.text('R');
      }
      auto cw = letter_counts(w);
      for (const auto& [t, c] : wt->residual) {
        if (letter_counts(t) != cw) sound = false;
        if (SymRBCom::Cmp::cmp(t, w) >= 0) sound = false;
      }
    }
    rep.add("rbcom/expressible-soundness", sound,
            sound ? std::to_string(found) + " witnesses checked" : detail);
  }
  rep.sort_by_id();
  return rep;
}

// ---------------------------------------------------------------------------
// free Poisson operator-algebra suites
// ---------------------------------------------------------------------------

namespace {

Engine make_engine(const OpLaw& law, Strategy strat = Strategy::LeftFirst) {
  Engine::Config cfg;
  cfg.law = law;
  cfg.generators = {"x", "y"};
  cfg.strategy = strat;
  return Engine(cfg);
}

struct IdentityStats {
  int checked = 0;
  bool pass = true;
  std::string detail;
};

void expect_zero(IdentityStats& st, Engine& eng, const LinComb& v,
                 const std::string& what) {
  ++st.checked;
  if (!v.is_zero() && st.pass) {
    st.pass = false;
    st.detail = what + " -> " + eng.to_text(v);
  }
}

// core identity battery shared by the weighted and Nijenhuis engines
void poisson_identities(Report& rep, Engine& eng, const Bounds& b,
                        const std::string& tag) {
  std::mt19937_64 rng(b.seed);
  IdentityStats anti, jac, leib, eq2, eq3, rem1, closure;
  auto sample = [&](int xcap, int rcap) {
    return random_element(eng, rng, xcap, rcap);
  };
  for (int i = 0; i < b.count; ++i) {
    eng.reset_fuel();
    LinComb u = sample(b.xdeg, b.rdeg);
    LinComb v = sample(b.xdeg, b.rdeg);
    LinComb w = sample(std::max(1, b.xdeg - 1), std::max(0, b.rdeg - 1));
    expect_zero(anti, eng, eng.bracket(u, v) + eng.bracket(v, u),
                "[u,v]+[v,u]");
    expect_zero(leib, eng,
                eng.bracket(u, eng.com_product(v, w)) -
                    eng.com_product(eng.bracket(u, v), w) -
                    eng.com_product(v, eng.bracket(u, w)),
                "Leibniz");
    expect_zero(jac, eng,
                eng.bracket(eng.bracket(u, v), w) +
                    eng.bracket(eng.bracket(v, w), u) +
                    eng.bracket(eng.bracket(w, u), v),
                "Jacobi");
    LinComb ru = eng.op_apply(u), rv = eng.op_apply(v);
    LinComb com_inner = eng.com_product(ru, v) + eng.com_product(u, rv);
    LinComb lie_inner = eng.bracket(ru, v) + eng.bracket(u, rv);
    if (eng.law().is_ns()) {
      com_inner -= eng.op_apply(eng.com_product(u, v));
      lie_inner -= eng.op_apply(eng.bracket(u, v));
    } else {
      com_inner += eng.com_product(u, v).scaled(eng.law().weight);
      lie_inner += eng.bracket(u, v).scaled(eng.law().weight);
    }
    expect_zero(eq2, eng, eng.com_product(ru, rv) - eng.op_apply(com_inner),
                "operator identity (product)");
    expect_zero(eq3, eng, eng.bracket(ru, rv) - eng.op_apply(lie_inner),
                "operator identity (bracket)");
    expect_zero(rem1, eng,
                eng.bracket(u, eng.com_product(rv, eng.op_apply(w))) -
                    eng.com_product(eng.bracket(u, rv), eng.op_apply(w)) -
                    eng.com_product(eng.bracket(u, eng.op_apply(w)), rv),
                "bracket vs product of two operator letters");
    ++closure.checked;
    try {
      eng.validate(eng.bracket(u, v));
      eng.validate(eng.com_product(u, v));
      eng.validate(ru);
    } catch (const domain_error& e) {
      if (closure.pass) {
        closure.pass = false;
        closure.detail = e.what();
      }
    }
  }
  auto put = [&](const char* name, const IdentityStats& st) {
    rep.add(tag + name, st.pass,
            st.pass ? std::to_string(st.checked) + " samples" : st.detail);
  };
  put("anticommutativity", anti);
  put("jacobi", jac);
  put("leibniz", leib);
  put("operator-product", eq2);
  put("operator-bracket", eq3);
  put("bracket-vs-op-product", rem1);
  put("closure-validation", closure);
}

}  // namespace

Report run_poisrb_suite(const Bounds& b) {
  Report rep;
  for (const Rational& lam :
       {Rational(0), Rational(1), Rational(-1)}) {
    Engine eng = make_engine(OpLaw{OpKind::RotaBaxter, lam});
    poisson_identities(rep, eng, b,
                       "poisrb/lambda=" + rational_to_string(lam) + "/");
  }
  // homomorphism oracle into the weight-1 polynomial model
  {
    Engine eng = make_engine(OpLaw{OpKind::RotaBaxter, Rational(1)});
    models::Poly2RBModel m;
    std::string err = m.verify(3);
    bool ok = err.empty();
    std::string detail = err;
    std::map<std::string, models::Poly2> phi{
        {"x", models::Poly2::var_x()}, {"y", models::Poly2::var_y()}};
    std::mt19937_64 rng(b.seed + 17);
    for (int i = 0; ok && i < b.count; ++i) {
      eng.reset_fuel();
      LinComb u = random_element(eng, rng, b.xdeg, b.rdeg);
      LinComb v = random_element(eng, rng, b.xdeg, b.rdeg);
      models::Poly2 eu = models::eval_hom(m, eng.law(), phi, u);
      models::Poly2 ev = models::eval_hom(m, eng.law(), phi, v);
      if (!(models::eval_hom(m, eng.law(), phi, eng.com_product(u, v)) ==
            eu * ev)) {
        ok = false;
        detail = "product: " + eng.to_text(u) + " | " + eng.to_text(v);
      }
      if (ok && !(models::eval_hom(m, eng.law(), phi, eng.bracket(u, v)) ==
                  models::poisson_closed(eu, ev))) {
        ok = false;
        detail = "bracket: " + eng.to_text(u) + " | " + eng.to_text(v);
      }
      if (ok && !(models::eval_hom(m, eng.law(), phi, eng.op_apply(u)) ==
                  models::split_op(eu))) {
        ok = false;
        detail = "operator: " + eng.to_text(u);
      }
    }
    rep.add("poisrb/homomorphism-oracle", ok, detail);
  }
  rep.sort_by_id();
  return rep;
}

Report run_nspois_suite(const Bounds& b) {
  Report rep;
  Engine eng = make_engine(OpLaw{OpKind::Nijenhuis, Rational(0)});
  poisson_identities(rep, eng, b, "nspois/");

  // worked examples: N(x)N(x) = 2 N(N(x)x) - N(N(x x)),
  //                  N(x)N(y) = N(N(x)y) + N(N(y)x) - N(N(xy))
  {
    LinComb x = LinComb::term(eng.gen_word("x"));
    LinComb y = LinComb::term(eng.gen_word("y"));
    LinComb nx = eng.op_apply(x), ny = eng.op_apply(y);
    LinComb lhs = eng.com_product(nx, nx);
    LinComb expect =
        eng.op_apply(eng.com_product(nx, x)).scaled(Rational(2)) -
        eng.op_apply(eng.op_apply(eng.com_product(x, x)));
    rep.add("nspois/worked-example-nxnx", lhs == expect);
    LinComb lhs2 = eng.com_product(nx, ny);
    LinComb expect2 = eng.op_apply(eng.com_product(nx, y)) +
                      eng.op_apply(eng.com_product(ny, x)) -
                      eng.op_apply(eng.op_apply(eng.com_product(x, y)));
    rep.add("nspois/worked-example-nxny", lhs2 == expect2);
  }

  // normal-form word sets coincide with the weight-0 engine's
  {
    Engine rbz = make_engine(OpLaw{OpKind::RotaBaxter, Rational(0)});
    auto ns_words = eng.enumerate_basis(3, 2, false);
    auto rb_words = rbz.enumerate_basis(3, 2, false);
    bool same = ns_words.size() == rb_words.size();
    for (std::size_t i = 0; same && i < ns_words.size(); ++i)
      same = eq_word(ns_words[i], rb_words[i]);
    rep.add("nspois/word-set-equality", same,
            std::to_string(ns_words.size()) + " words");
    // expressibility flags agree on operator letters
    bool flags = true;
    int nops = 0;
    for (std::size_t i = 0; i < ns_words.size() && flags; ++i) {
      const auto& w = ns_words[i];
      if (w->factors.size() != 1 || w->factors[0]->kind != AtomKind::Op)
        continue;
      ++nops;
      if (eng.is_expressible(w->factors[0]) !=
          rbz.is_expressible(rb_words[i]->factors[0]))
        flags = false;
    }
    rep.add("nspois/expressibility-agreement", flags,
            std::to_string(nops) + " operator letters");
  }

  // Proposition-4 quadruple over the free Nijenhuis carrier
  {
    models::VS<LinComb> vs{
        [](const LinComb& a, const LinComb& b) { return a + b; },
        [](const LinComb& a, const LinComb& b) { return a - b; },
        [](const LinComb& a, const LinComb& b) { return a == b; }};
    models::FourOps<LinComb> ops;
    ops.circ = [&eng](const LinComb& a, const LinComb& b) {
      return eng.com_product(eng.op_apply(a), b);
    };
    ops.vee = [&eng](const LinComb& a, const LinComb& b) {
      return -eng.op_apply(eng.com_product(a, b));
    };
    ops.dot = [&eng](const LinComb& a, const LinComb& b) {
      return eng.bracket(eng.op_apply(a), b);
    };
    ops.wedge = [&eng](const LinComb& a, const LinComb& b) {
      return -eng.op_apply(eng.bracket(a, b));
    };
    std::mt19937_64 rng(b.seed + 5);
    std::vector<std::array<LinComb, 3>> triples;
    for (int i = 0; i < std::max(5, b.count / 5); ++i)
      triples.push_back({random_element(eng, rng, 2, 1, 1),
                         random_element(eng, rng, 2, 1, 1),
                         random_element(eng, rng, 1, 1, 1)});
    auto cr = models::check_ns_poisson(vs, ops, triples);
    rep.add("nspois/prop4-free-carrier", cr.pass,
            cr.pass ? std::to_string(triples.size()) + " triples"
                    : cr.failures.front());
  }
  rep.sort_by_id();
  return rep;
}

// ---------------------------------------------------------------------------
// models suite
// ---------------------------------------------------------------------------

namespace {

models::StructAlgebra make_fxf() {
  // F x F: e0, e1 idempotents, zero bracket
  models::StructAlgebra a;
  a.dim = 2;
  a.names = {"e0", "e1"};
  a.prod.assign(2, std::vector<models::Vec>(2, models::Vec(2, Rational(0))));
  a.prod[0][0][0] = 1;
  a.prod[1][1][1] = 1;
  return a;
}

models::StructAlgebra make_trunc_poisson() {
  // basis 1, x, y with xx = xy = yy = 0 and [x, y] = y
  models::StructAlgebra a;
  a.dim = 3;
  a.names = {"1", "x", "y"};
  a.prod.assign(3, std::vector<models::Vec>(3, models::Vec(3, Rational(0))));
  for (int i = 0; i < 3; ++i) {
    a.prod[0][i][i] = 1;
    a.prod[i][0][i] = 1;
  }
  auto brk = a.prod;
  for (auto& row : brk)
    for (auto& v : row) v.assign(3, Rational(0));
  brk[1][2][2] = 1;
  brk[2][1][2] = -1;
  a.brk = brk;
  return a;
}

std::vector<models::Poly2> random_poly2s(std::mt19937_64& rng, int n,
                                         int maxdeg) {
  std::vector<models::Poly2> out;
  for (int t = 0; t < n; ++t) {
    models::Poly2 p;
    for (int k = 0; k < 3; ++k) {
      int i = static_cast<int>(rng() % (maxdeg + 1));
      int j = static_cast<int>(rng() % (maxdeg + 1 - i));
      p = p + models::Poly2::mono(i, j, Rational(static_cast<long>(rng() % 7) - 3));
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

Report run_models_suite(const std::string& model_json_text) {
  Report rep;
  using namespace models;

  // Example-1 polynomial model
  Poly2RBModel poly;
  {
    std::string err = poly.verify(4);
    rep.add("models/example1-axioms-and-operator", err.empty(), err);
    Poly2 py = split_op(Poly2::var_y());
    Poly2 lhs = py * py;
    Poly2 rhs = split_op(py * Poly2::var_y() + Poly2::var_y() * py +
                         Poly2::var_y() * Poly2::var_y());
    rep.add("models/example1-spot-instance",
            lhs == rhs && lhs == Poly2::mono(0, 2));
    // bracket route equality on random polynomials
    std::mt19937_64 rng(11);
    auto ps = random_poly2s(rng, 40, 4);
    bool routes = true;
    for (std::size_t i = 0; i + 1 < ps.size() && routes; i += 2)
      routes = poisson_closed(ps[i], ps[i + 1]) ==
               poisson_leibniz(ps[i], ps[i + 1]);
    rep.add("models/example1-bracket-routes-agree", routes);
  }

  // structure-constant algebras and AYBE
  {
    auto fxf = make_fxf();
    rep.add("models/fxf-axioms", fxf.validate().empty(), fxf.validate());
    auto tp = make_trunc_poisson();
    rep.add("models/trunc-poisson-axioms", tp.validate().empty(),
            tp.validate());

    rep.add("models/aybe-zero-tensor",
            check_aybe(fxf, Tensor2::zero(2), Rational(0)));
    bool fam = true;
    for (const Rational& lam : {Rational(1), Rational(-1), Rational(2)}) {
      if (!check_aybe(fxf, Tensor2::unit_unit(fxf, lam), lam)) fam = false;
      if (!check_aybe(tp, Tensor2::unit_unit(tp, lam), lam)) fam = false;
    }
    rep.add("models/aybe-unit-family", fam);
    rep.add("models/aybe-negative-control",
            !check_aybe(fxf, Tensor2::unit_unit(fxf, Rational(1)), Rational(0)));

    // principal operators
    {
      auto P0 = principal_matrix(fxf, Tensor2::zero(2));
      bool zero_map = true;
      for (const auto& col : P0)
        for (const auto& v : col) zero_map = zero_map && v == 0;
      rep.add("models/principal-zero", zero_map);
      Rational lam(2);
      auto Pl = principal_matrix(fxf, Tensor2::unit_unit(fxf, lam));
      bool scaled_id = true;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          scaled_id =
              scaled_id && Pl[i][j] == (i == j ? lam : Rational(0));
      rep.add("models/principal-unit-unit-is-scaled-identity", scaled_id);
      // e (x) e over F x F: P(v) = e v e = projection to the first slot
      Tensor2 ee = Tensor2::zero(2);
      ee.c[0][0] = 1;
      auto Pe = principal_matrix(fxf, ee);
      rep.add("models/principal-e-tensor-e",
              Pe[0][0] == 1 && Pe[0][1] == 0 && Pe[1][0] == 0 && Pe[1][1] == 0);
    }

    // Proposition 2 on the unit family, including the contraction identity
    bool prop2 = true;
    std::string det;
    for (const Rational& lam : {Rational(1), Rational(-1), Rational(2)}) {
      auto r = Tensor2::unit_unit(tp, lam);
      auto cr = check_prop2(tp, r, lam);
      if (!cr.pass) {
        prop2 = false;
        det = cr.failures.front();
      }
    }
    rep.add("models/prop2-unit-family", prop2, det);
    rep.add("models/prop2-zero-tensor",
            check_prop2(tp, Tensor2::zero(3), Rational(0)).pass);
    rep.add("models/prop2-precondition-surfaced",
            !check_prop2(fxf, Tensor2::unit_unit(fxf, Rational(1)), Rational(0))
                 .pass);
  }

  // derived prePoisson pair over verified weight-0 operators
  {
    Poly1IntModel integ;
    std::string err = integ.verify(6);
    rep.add("models/integration-operator", err.empty(), err);
    VS<Poly1> vs{[](const Poly1& a, const Poly1& b) { return a + b; },
                 [](const Poly1& a, const Poly1& b) { return a - b; },
                 [](const Poly1& a, const Poly1& b) { return a == b; }};
    auto [circ, star] = derived_prepoisson(integ);
    std::mt19937_64 rng(23);
    std::vector<std::array<Poly1, 3>> triples;
    for (int i = 0; i < 60; ++i) {
      auto rp = [&]() {
        Poly1 p;
        for (int k = 0; k < 3; ++k)
          p = p + Poly1::mono(static_cast<int>(rng() % 5),
                              Rational(static_cast<long>(rng() % 7) - 3));
        return p;
      };
      triples.push_back({rp(), rp(), rp()});
    }
    auto cr = check_prepoisson(vs, circ, star, triples);
    rep.add("models/prepoisson-integration", cr.pass,
            cr.pass ? "" : cr.failures.front());
    // corrupted operation must fail
    Bilinear<Poly1> bad = [&](const Poly1& a, const Poly1& b) {
      return circ(a, b) + Poly1::mono(0, Rational(1));
    };
    auto crbad = check_prepoisson(vs, bad, star, triples);
    rep.add("models/prepoisson-negative-control", !crbad.pass);
  }

  // derived postPoisson operations are computable (weight 1)
  {
    auto o = derived_postpoisson(poly);
    Poly2 x = Poly2::var_x(), y = Poly2::var_y();
    rep.add("models/postpoisson-operations",
            o.vee(x, y) == x * y && o.circ(y, y) == split_op(y) * y &&
                o.wedge(x, y) == poisson_closed(x, y));
  }

  // Definition 5 checker: Proposition-4 quadruple over the Nijenhuis model
  {
    Poly2NijModel nij;
    std::string err = nij.verify(3);
    rep.add("models/nijenhuis-operator", err.empty(), err);
    VS<Poly2> vs{[](const Poly2& a, const Poly2& b) { return a + b; },
                 [](const Poly2& a, const Poly2& b) { return a - b; },
                 [](const Poly2& a, const Poly2& b) { return a == b; }};
    auto ops = derived_ns_quadruple(nij);
    std::mt19937_64 rng(29);
    std::vector<std::array<Poly2, 3>> triples;
    auto ps = random_poly2s(rng, 90, 2);
    for (int i = 0; i + 2 < static_cast<int>(ps.size()); i += 3)
      triples.push_back({ps[i], ps[i + 1], ps[i + 2]});
    auto cr = check_ns_poisson(vs, ops, triples);
    rep.add("models/ns-poisson-prop4", cr.pass,
            cr.pass ? "" : cr.failures.front());

    // trivial wedge/vee: a prePoisson pair is an NS-Poisson algebra
    Poly1IntModel integ;
    integ.verify(6);
    auto [circ, star] = derived_prepoisson(integ);
    VS<Poly1> vs1{[](const Poly1& a, const Poly1& b) { return a + b; },
                  [](const Poly1& a, const Poly1& b) { return a - b; },
                  [](const Poly1& a, const Poly1& b) { return a == b; }};
    FourOps<Poly1> pre;
    pre.circ = circ;
    pre.dot = star;
    pre.vee = [](const Poly1&, const Poly1&) { return Poly1::zero(); };
    pre.wedge = [](const Poly1&, const Poly1&) { return Poly1::zero(); };
    std::vector<std::array<Poly1, 3>> t1;
    std::mt19937_64 rng1(31);
    for (int i = 0; i < 40; ++i) {
      auto rp = [&]() {
        Poly1 p;
        for (int k = 0; k < 2; ++k)
          p = p + Poly1::mono(static_cast<int>(rng1() % 4),
                              Rational(static_cast<long>(rng1() % 5) - 2));
        return p;
      };
      t1.push_back({rp(), rp(), rp()});
    }
    auto cr1 = check_ns_poisson(vs1, pre, t1);
    rep.add("models/ns-poisson-trivial-wedge-vee", cr1.pass,
            cr1.pass ? "" : cr1.failures.front());
    // corrupted circ fails with a named identity
    FourOps<Poly2> bad = ops;
    bad.circ = [&](const Poly2& a, const Poly2& b) {
      return ops.circ(a, b) + Poly2::mono(1, 1);
    };
    auto crbad = check_ns_poisson(vs, bad, triples);
    rep.add("models/ns-poisson-negative-control",
            !crbad.pass && !crbad.failures.empty());
  }

  // evaluation homomorphism frozen examples
  {
    Engine eng = make_engine(OpLaw{OpKind::RotaBaxter, Rational(1)});
    std::map<std::string, Poly2> phi{{"x", Poly2::var_x()},
                                     {"y", Poly2::var_y()}};
    LinComb x = LinComb::term(eng.gen_word("x"));
    LinComb y = LinComb::term(eng.gen_word("y"));
    rep.add("models/eval-op-of-x-vanishes",
            eval_hom(poly, eng.law(), phi, eng.op_apply(x)).is_zero());
    rep.add("models/eval-generator",
            eval_hom(poly, eng.law(), phi, x) == Poly2::var_x());
    rep.add("models/eval-bracket-xy",
            eval_hom(poly, eng.law(), phi, eng.bracket(x, y)) ==
                Poly2::var_y());
  }

  // externally supplied model file
  if (!model_json_text.empty()) {
    try {
      nlohmann::json j = nlohmann::json::parse(model_json_text);
      if (j.contains("type") && j["type"] == "example1") {
        Poly2RBModel m;
        std::string err = m.verify(4);
        rep.add("models/file-example1", err.empty(), err);
      } else {
        auto a = StructAlgebra::from_json_text(model_json_text);
        std::string err = a.validate();
        rep.add("models/file-axioms", err.empty(), err);
        if (err.empty() && j.contains("tensor")) {
          Tensor2 r = Tensor2::zero(a.dim);
          auto& tj = j["tensor"];
          for (std::size_t p = 0; p < a.dim; ++p)
            for (std::size_t q = 0; q < a.dim; ++q) {
              if (tj[p][q].is_number_integer())
                r.c[p][q] = Rational(tj[p][q].get<long long>());
              else
                r.c[p][q] = rational_from_string(tj[p][q].get<std::string>());
            }
          Rational lam(0);
          if (j.contains("lambda"))
            lam = j["lambda"].is_string()
                      ? rational_from_string(j["lambda"].get<std::string>())
                      : Rational(j["lambda"].get<long long>());
          auto cr = check_prop2(a, r, lam);
          rep.add("models/file-tensor-prop2", cr.pass,
                  cr.pass ? "" : cr.failures.front());
        }
      }
    } catch (const std::exception& e) {
      rep.add("models/file-load", false, e.what());
    }
  }
  rep.sort_by_id();
  return rep;
}

// ---------------------------------------------------------------------------
// confluence / determinism
// ---------------------------------------------------------------------------

namespace {

// random raw expression text over x, y with bounded size
ExprPtr random_expr(std::mt19937_64& rng, char opsym, int xcap, int rcap);

ExprPtr mk_leaf(std::mt19937_64& rng) {
  auto e = std::make_unique<Expr>();
  e->kind = Expr::Kind::Var;
  e->var = (rng() % 2) ? "x" : "y";
  return e;
}

ExprPtr random_expr(std::mt19937_64& rng, char opsym, int xcap, int rcap) {
  if (xcap <= 1) {
    if (rcap >= 1 && rng() % 4 == 0) {
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Op;
      e->opsym = opsym;
      e->a = random_expr(rng, opsym, xcap, rcap - 1);
      return e;
    }
    return mk_leaf(rng);
  }
  switch (rng() % 6) {
    case 0:
      return mk_leaf(rng);
    case 1: {
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Op;
      if (rcap < 1) return mk_leaf(rng);
      e->opsym = opsym;
      e->a = random_expr(rng, opsym, xcap, rcap - 1);
      return e;
    }
    case 2: {
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Neg;
      e->a = random_expr(rng, opsym, xcap, rcap);
      return e;
    }
    case 3: {
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Add;
      e->a = random_expr(rng, opsym, xcap - 1, rcap);
      e->b = random_expr(rng, opsym, xcap - 1, rcap);
      return e;
    }
    default: {
      auto e = std::make_unique<Expr>();
      e->kind = (rng() % 2) ? Expr::Kind::Mul : Expr::Kind::Bracket;
      int xl = 1 + static_cast<int>(rng() % (xcap - 1));
      int rl = static_cast<int>(rng() % (rcap + 1));
      e->a = random_expr(rng, opsym, xl, rl);
      e->b = random_expr(rng, opsym, xcap - xl, rcap - rl);
      return e;
    }
  }
}

}  // namespace

Report run_confluence_suite(const Bounds& b) {
  Report rep;
  for (const OpLaw& law :
       {OpLaw{OpKind::RotaBaxter, Rational(1)}, OpLaw{OpKind::Nijenhuis, {}}}) {
    std::mt19937_64 rng(b.seed);
    bool agree = true, rerun = true, roundtrip = true;
    std::string detail;
    const std::string tag =
        law.is_ns() ? "confluence/ns/" : "confluence/rb/";
    for (int i = 0; i < b.count; ++i) {
      ExprPtr e = random_expr(rng, law.symbol(), b.xdeg, b.rdeg);
      Engine ea = make_engine(law, Strategy::LeftFirst);
      Engine eb = make_engine(law, Strategy::RightFirst);
      LinComb va, vb;
      try {
        va = evaluate(ea, *e);
        vb = evaluate(eb, *e);
      } catch (const domain_error&) {
        continue;  // constant-term expressions are rejected by evaluate
      }
      if (!(va == vb)) {
        agree = false;
        detail = "strategies disagree: " + ea.to_text(va) + " vs " +
                 eb.to_text(vb);
      }
      Engine ec = make_engine(law, Strategy::LeftFirst);
      LinComb vc = evaluate(ec, *e);
      if (ea.to_text(va) != ec.to_text(vc) ||
          ea.to_json(va) != ec.to_json(vc))
        rerun = false;
      // canonical output reparses to itself
      if (!va.is_zero()) {
        ExprPtr back = parse_expr(ea.to_text(va));
        Engine ed = make_engine(law, Strategy::LeftFirst);
        if (!(evaluate(ed, *back) == va)) {
          roundtrip = false;
          detail = ea.to_text(va);
        }
      }
    }
    rep.add(tag + "strategy-agreement", agree, detail);
    rep.add(tag + "byte-identical-rerun", rerun);
    rep.add(tag + "round-trip", roundtrip, roundtrip ? "" : detail);
  }
  rep.sort_by_id();
  return rep;
}

Report run_suite(const std::string& name, const Bounds& b,
                 const std::string& model_json_text) {
  if (name == "rbcom") return run_rbcom_suite(b);
  if (name == "poisrb") return run_poisrb_suite(b);
  if (name == "nspois") return run_nspois_suite(b);
  if (name == "models") return run_models_suite(model_json_text);
  if (name == "confluence") return run_confluence_suite(b);
  throw domain_error("unknown suite '" + name +
                     "' (expected rbcom|poisrb|nspois|models|confluence)");
}

}  // namespace prb::checks
