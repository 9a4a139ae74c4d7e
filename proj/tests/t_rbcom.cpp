#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "checks.hpp"
#include "doctest.h"
#include "rbcom.hpp"

using namespace prb;

namespace {

using SW = SymStack;
using LC = SymRBCom::LC;

std::vector<SymLetter> ab() {
  return {SymLetter{"x", 0}, SymLetter{"y", 1}};
}

SW stack(std::vector<std::vector<int>> ranks) {
  auto alpha = ab();
  std::vector<std::vector<SymLetter>> lv;
  for (auto& m : ranks) {
    std::vector<SymLetter> mono;
    for (int r : m) mono.push_back(alpha[static_cast<std::size_t>(r)]);
    lv.push_back(std::move(mono));
  }
  return SW::make(std::move(lv));
}

}  // namespace

TEST_CASE("stack words validate their shape") {
  CHECK_THROWS_AS(stack({{0}, {}}), domain_error);  // empty innermost
  SW w = stack({{}, {0}});
  CHECK(w.height() == 2);
  CHECK(w.outer_r() == 1);
  CHECK(w.text('R') == "R(x)");
  CHECK(stack({{1}, {0}}).text('R') == "R(x)*y");
}

TEST_CASE("worked product example at several weights") {
  for (const Rational& lam : {Rational(0), Rational(1), Rational(-1), Rational(2)}) {
    SymRBCom rb(OpLaw{OpKind::RotaBaxter, lam});
    LC p = rb.product(stack({{}, {0}}), stack({{}, {0}}));
    LC expect = LC::term(stack({{}, {0}, {0}}), Rational(2));
    expect += LC::term(stack({{}, {0, 0}}), lam);
    CHECK(p == expect);
  }
}

TEST_CASE("one-step expansion for distinct letters") {
  SymRBCom rb(OpLaw{OpKind::RotaBaxter, Rational(1)});
  LC p = rb.product(stack({{}, {0}}), stack({{}, {1}}));
  LC expect = LC::term(stack({{}, {1}, {0}}));
  expect += LC::term(stack({{}, {0}, {1}}));
  expect += LC::term(stack({{}, {0, 1}}));
  CHECK(p == expect);
}

TEST_CASE("words without operator letters multiply as monomials") {
  SymRBCom rb(OpLaw{OpKind::RotaBaxter, Rational(1)});
  CHECK(rb.product(stack({{0}}), stack({{1}})) == LC::term(stack({{0, 1}})));
  // height-1 against a tower merges into the outer monomial
  CHECK(rb.product(stack({{0}}), stack({{1}, {0}})) ==
        LC::term(stack({{0, 1}, {0}})));
}

TEST_CASE("wrap pushes one operator level") {
  CHECK(SymRBCom::Cmp::cmp(SW::wrap(stack({{0}})), stack({{}, {0}})) == 0);
  CHECK(SymRBCom::Cmp::cmp(SW::wrap(stack({{1}, {0}})), stack({{}, {1}, {0}})) ==
        0);
  SymRBCom rb(OpLaw{OpKind::RotaBaxter, Rational(1)});
  CHECK(SymRBCom::wrap(LC()).is_zero());
}

TEST_CASE("operator identity holds exhaustively in small degrees") {
  for (const Rational& lam : {Rational(0), Rational(1), Rational(-1), Rational(2)}) {
    SymRBCom rb(OpLaw{OpKind::RotaBaxter, lam});
    std::vector<SW> words;
    // all words with at most 3 letters and height <= 2
    std::vector<std::vector<int>> monos = {{0}, {1}, {0, 0}, {0, 1}, {1, 1}};
    for (const auto& m : monos) words.push_back(stack({m}));
    for (const auto& m1 : monos)
      for (const auto& m2 : monos) {
        std::vector<std::vector<int>> lv = {m1, m2};
        words.push_back(stack(lv));
      }
    for (const auto& m2 : monos) {
      std::vector<std::vector<int>> lv = {{}, m2};
      words.push_back(stack(lv));
    }
    for (const auto& u : words)
      for (const auto& v : words) {
        LC lhs = rb.product(SW::wrap(u), SW::wrap(v));
        LC inner = rb.product(SW::wrap(u), v);
        inner += rb.product(u, SW::wrap(v));
        inner += rb.product(u, v).scaled(lam);
        CHECK(lhs == SymRBCom::wrap(inner));
      }
  }
}

TEST_CASE("commutativity and associativity on random triples") {
  std::mt19937_64 rng(77);
  SymRBCom rb(OpLaw{OpKind::RotaBaxter, Rational(-1)});
  auto alpha = ab();
  auto rnd = [&]() {
    int h = 1 + static_cast<int>(rng() % 3);
    std::vector<std::vector<SymLetter>> lv(h);
    lv[h - 1].push_back(alpha[rng() % 2]);
    int extra = static_cast<int>(rng() % 3);
    for (int i = 0; i < extra; ++i) lv[rng() % h].push_back(alpha[rng() % 2]);
    return SW::make(std::move(lv));
  };
  for (int i = 0; i < 200; ++i) {
    SW u = rnd(), v = rnd(), w = rnd();
    CHECK(rb.product(u, v) == rb.product(v, u));
    CHECK(rb.product_lc(rb.product(u, v), LC::term(w)) ==
          rb.product_lc(LC::term(u), rb.product(v, w)));
  }
}

TEST_CASE("expressibility witnesses") {
  SymRBCom rb(OpLaw{OpKind::RotaBaxter, Rational(1)});

  SUBCASE("R(R(x)x) is expressible with k = 2") {
    auto wit = rb.expressible(stack({{}, {0}, {0}}));
    REQUIRE(wit.has_value());
    CHECK(wit->k == 2);
    CHECK(SymRBCom::Cmp::cmp(wit->a, stack({{0}})) == 0);
    CHECK(SymRBCom::Cmp::cmp(wit->b, stack({{0}})) == 0);
    // residual = k w - R(a)R(b) = -lambda R(x^2)
    LC expect_res = LC::term(stack({{}, {0, 0}}), Rational(-1));
    CHECK(wit->residual == expect_res);
    // soundness: product reproduces k w - residual
    LC p = rb.product(SW::wrap(wit->a), SW::wrap(wit->b));
    LC back = LC::term(stack({{}, {0}, {0}}), Rational(2));
    back -= wit->residual;
    CHECK(p == back);
  }

  SUBCASE("single-letter and pure towers are not expressible") {
    CHECK(!rb.expressible(stack({{}, {0}})).has_value());
    CHECK(!rb.expressible(stack({{}, {}, {0}})).has_value());
  }

  SUBCASE("precondition requires an operator letter") {
    CHECK_THROWS_AS(rb.expressible(stack({{0}})), domain_error);
  }

  SUBCASE("words with a nonempty outer monomial are never witnesses") {
    CHECK(!rb.expressible(stack({{1}, {0}})).has_value());
  }

  SUBCASE("R(R(y)x) is the leading shape for distinct letters") {
    auto wit = rb.expressible(stack({{}, {0}, {1}}));
    REQUIRE(wit.has_value());
    CHECK(wit->k == 1);
    CHECK(SymRBCom::Cmp::cmp(wit->a, stack({{0}})) == 0);
    CHECK(SymRBCom::Cmp::cmp(wit->b, stack({{1}})) == 0);
    // and the mirror word R(R(x)y) is not expressible
    CHECK(!rb.expressible(stack({{}, {1}, {0}})).has_value());
  }
}

TEST_CASE("letter multisets are conserved by products") {
  std::mt19937_64 rng(99);
  SymRBCom rb(OpLaw{OpKind::RotaBaxter, Rational(2)});
  auto alpha = ab();
  auto counts = [](const SW& w) {
    std::pair<int, int> c{0, 0};
    for (const auto& m : w.levels)
      for (const auto& l : m) (l.rank == 0 ? c.first : c.second)++;
    return c;
  };
  auto rnd = [&]() {
    int h = 1 + static_cast<int>(rng() % 3);
    std::vector<std::vector<SymLetter>> lv(h);
    lv[h - 1].push_back(alpha[rng() % 2]);
    int extra = static_cast<int>(rng() % 3);
    for (int i = 0; i < extra; ++i) lv[rng() % h].push_back(alpha[rng() % 2]);
    return SW::make(std::move(lv));
  };
  for (int i = 0; i < 100; ++i) {
    SW u = rnd(), v = rnd();
    auto cu = counts(u), cv = counts(v);
    for (const auto& [w, c] : rb.product(u, v)) {
      auto cw = counts(w);
      CHECK(cw.first == cu.first + cv.first);
      CHECK(cw.second == cu.second + cv.second);
    }
  }
}

TEST_CASE("suite runner is green") {
  checks::Bounds b;
  b.seed = 3;
  b.count = 40;
  auto rep = checks::run_rbcom_suite(b);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
}
