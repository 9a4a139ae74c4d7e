#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lincomb.hpp"
#include "scalar.hpp"

namespace prb {

// Free commutative algebra with a Rota-Baxter or Nijenhuis operator over an
// arbitrary ordered alphabet L. Basis words are stacks
//
//   [u_1, u_2, ..., u_n]  ~  R(R(...R(u_n)u_{n-1}...)u_2)u_1
//
// where each u_j is a commutative monomial over L, u_n is nonempty and the
// intermediate monomials may be empty. The traits type supplies the letter
// order and degrees:
//
//   static int cmp(const L&, const L&);   // degree-first total order
//   static int xdeg(const L&);
//   static int rdeg(const L&);
//   static std::size_t hash(const L&);
//   static std::string text(const L&);
template <class L, class Tr>
struct StackWord {
  std::vector<std::vector<L>> levels;  // outermost monomial first
  int xdeg = 0;
  int rdeg = 0;
  std::size_t hash = 0;

  int height() const { return static_cast<int>(levels.size()); }
  int outer_r() const { return height() - 1; }

  static StackWord make(std::vector<std::vector<L>> lv) {
    if (lv.empty() || lv.back().empty())
      throw domain_error("stack word needs a nonempty innermost monomial");
    StackWord w;
    for (auto& m : lv)
      std::sort(m.begin(), m.end(),
                [](const L& a, const L& b) { return Tr::cmp(a, b) > 0; });
    w.levels = std::move(lv);
    std::size_t h = 0x737461636bULL;
    for (const auto& m : w.levels) {
      h = h * 1099511628211ULL ^ 0x4c;
      for (const auto& x : m) {
        w.xdeg += Tr::xdeg(x);
        w.rdeg += Tr::rdeg(x);
        h = h * 1099511628211ULL ^ Tr::hash(x);
      }
    }
    w.rdeg += w.outer_r();
    w.hash = h;
    return w;
  }

  static StackWord monomial(std::vector<L> m) {
    return make({std::move(m)});
  }

  // R applied to the whole word: push an empty outer monomial.
  static StackWord wrap(const StackWord& w) {
    std::vector<std::vector<L>> lv;
    lv.reserve(w.levels.size() + 1);
    lv.emplace_back();
    lv.insert(lv.end(), w.levels.begin(), w.levels.end());
    return make(std::move(lv));
  }

  StackWord tail() const {  // argument of the outer R; height() must be >= 2
    return make({levels.begin() + 1, levels.end()});
  }

  std::string text(char opsym) const { return text_from(0, opsym); }

 private:
  std::string text_from(std::size_t lvl, char opsym) const {
    std::string s;
    if (lvl + 1 < levels.size()) {
      s = std::string(1, opsym) + "(" + text_from(lvl + 1, opsym) + ")";
    }
    for (const auto& x : levels[lvl]) {
      if (!s.empty()) s += "*";
      s += Tr::text(x);
    }
    return s;
  }
};

// Degree-first comparison matching the basis-word order: xdeg, then rdeg,
// then the outer factor list (letters of u_1 plus the optional R-letter)
// sorted descending, letters below R-letters at equal degrees and R-letters
// compared by their arguments.
template <class L, class Tr>
struct StackCmp3 {
  using SW = StackWord<L, Tr>;

  int operator()(const SW& a, const SW& b) const { return cmp(a, b); }

  static int cmp(const SW& a, const SW& b) {
    if (int c = cmp_i(a.xdeg, b.xdeg)) return c;
    if (int c = cmp_i(a.rdeg, b.rdeg)) return c;
    return cmp_struct(a, 0, b, 0);
  }

 private:
  static int cmp_i(long a, long b) { return a < b ? -1 : (a > b ? 1 : 0); }

  static int sub_xdeg(const SW& w, std::size_t lvl) {
    int d = 0;
    for (std::size_t j = lvl; j < w.levels.size(); ++j)
      for (const auto& x : w.levels[j]) d += Tr::xdeg(x);
    return d;
  }
  static int sub_rdeg(const SW& w, std::size_t lvl) {
    int d = static_cast<int>(w.levels.size() - 1 - lvl);
    for (std::size_t j = lvl; j < w.levels.size(); ++j)
      for (const auto& x : w.levels[j]) d += Tr::rdeg(x);
    return d;
  }

  // factor: index < size(monomial) -> letter; index == size -> the R-letter
  struct Factor {
    bool is_r;
    const L* letter;
    int xdeg, rdeg;
  };

  static std::vector<Factor> factors(const SW& w, std::size_t lvl) {
    std::vector<Factor> fs;
    for (const auto& x : w.levels[lvl])
      fs.push_back(Factor{false, &x, Tr::xdeg(x), Tr::rdeg(x)});
    if (lvl + 1 < w.levels.size())
      fs.push_back(Factor{true, nullptr, sub_xdeg(w, lvl + 1),
                          sub_rdeg(w, lvl + 1) + 1});
    return fs;
  }

  static int cmp_factor(const SW& wa, std::size_t la, const Factor& fa,
                        const SW& wb, std::size_t lb, const Factor& fb) {
    if (int c = cmp_i(fa.xdeg, fb.xdeg)) return c;
    if (int c = cmp_i(fa.rdeg, fb.rdeg)) return c;
    if (fa.is_r != fb.is_r) return fa.is_r ? 1 : -1;
    if (!fa.is_r) return Tr::cmp(*fa.letter, *fb.letter);
    return cmp_struct(wa, la + 1, wb, lb + 1);
  }

  static int cmp_struct(const SW& a, std::size_t la, const SW& b,
                        std::size_t lb) {
    auto fa = factors(a, la);
    auto fb = factors(b, lb);
    // Factor count first, mirroring the basis-word order.
    if (int c = cmp_i(fa.size(), fb.size())) return c;
    auto desc = [](const SW& w, std::vector<Factor>& fs, std::size_t lvl) {
      std::sort(fs.begin(), fs.end(), [&](const Factor& p, const Factor& q) {
        return cmp_factor(w, lvl, p, w, lvl, q) > 0;
      });
    };
    desc(a, fa, la);
    desc(b, fb, lb);
    for (std::size_t i = 0; i < fa.size(); ++i)
      if (int c = cmp_factor(a, la, fa[i], b, lb, fb[i])) return c;
    return 0;
  }
};

template <class L, class Tr>
class RBCom {
 public:
  using SW = StackWord<L, Tr>;
  using Cmp = StackCmp3<L, Tr>;
  using LC = LinCombT<SW, Cmp>;

  explicit RBCom(OpLaw law, std::function<void()> tick = {})
      : law_(std::move(law)), tick_(std::move(tick)) {}

  const OpLaw& law() const { return law_; }

  static LC wrap(const LC& c) {
    LC r;
    for (const auto& [w, k] : c) r.add(SW::wrap(w), k);
    return r;
  }

  // Product recursion: words without an outer R multiply as monomials;
  // otherwise R(a)u * R(b)v = R(R(a)b + aR(b) + <weight term>)(uv), the
  // weight term being lambda*ab for Rota-Baxter and -R(ab) for Nijenhuis.
  LC product(const SW& u, const SW& v) {
    if (tick_) tick_();
    if (u.height() == 1 || v.height() == 1) {
      const SW& mono = u.height() == 1 ? u : v;
      const SW& other = u.height() == 1 ? v : u;
      auto lv = other.levels;
      lv[0].insert(lv[0].end(), mono.levels[0].begin(), mono.levels[0].end());
      return LC::term(SW::make(std::move(lv)));
    }
    SW a = u.tail(), b = v.tail();
    LC inner = product(SW::wrap(a), b);
    inner += product(a, SW::wrap(b));
    LC ab = product_lc(LC::term(a), LC::term(b));
    if (law_.is_ns())
      inner -= wrap(ab);
    else
      inner += ab.scaled(law_.weight);
    std::vector<L> outer = u.levels[0];
    outer.insert(outer.end(), v.levels[0].begin(), v.levels[0].end());
    LC r;
    for (const auto& [w, k] : inner) {
      auto lv = w.levels;
      lv.insert(lv.begin(), outer);
      r.add(SW::make(std::move(lv)), k);
    }
    return r;
  }

  LC product_lc(const LC& x, const LC& y) {
    LC r;
    for (const auto& [wx, cx] : x)
      for (const auto& [wy, cy] : y) r += product(wx, wy).scaled(cx * cy);
    return r;
  }

  struct Witness {
    std::uint64_t k = 0;
    SW a, b;      // leading(product(R(a), R(b))) == k * w
    LC residual;  // k*w - product(R(a), R(b))
  };

  // Exhaustive search for a pair of basis words whose wrapped product has w
  // as its leading word. The candidate space is bounded by the letter
  // multiset and the outer R-count of w; among all witnesses the one with
  // the cmp-smallest (a, b) is returned.
  std::optional<Witness> expressible(const SW& w) {
    if (w.height() < 2)
      throw domain_error("expressibility requires an R-letter");
    if (!w.levels[0].empty()) return std::nullopt;
    std::vector<L> letters;
    for (const auto& m : w.levels)
      letters.insert(letters.end(), m.begin(), m.end());
    std::sort(letters.begin(), letters.end(),
              [](const L& a, const L& b) { return Tr::cmp(a, b) > 0; });
    // Every word of R(a)R(b) with maximal degree keeps the full letter
    // multiset and has height(a) + height(b) + 1 levels, so candidate
    // heights sum to the outer R-count of w.
    const int spine = w.outer_r();
    std::optional<Witness> best;
    const std::size_t n = letters.size();
    if (n < 2 || spine < 2) return std::nullopt;
    // distinct letters with multiplicities
    std::vector<std::pair<L, int>> dist;
    for (const auto& x : letters) {
      if (!dist.empty() && Tr::cmp(dist.back().first, x) == 0)
        ++dist.back().second;
      else
        dist.emplace_back(x, 1);
    }
    std::vector<int> take(dist.size(), 0);
    split_rec(w, dist, take, 0, spine, best);
    return best;
  }

 private:
  void split_rec(const SW& w, const std::vector<std::pair<L, int>>& dist,
                 std::vector<int>& take, std::size_t i, int spine,
                 std::optional<Witness>& best) {
    if (i == dist.size()) {
      std::vector<L> sa, sb;
      for (std::size_t j = 0; j < dist.size(); ++j) {
        for (int t = 0; t < take[j]; ++t) sa.push_back(dist[j].first);
        for (int t = take[j]; t < dist[j].second; ++t)
          sb.push_back(dist[j].first);
      }
      if (sa.empty() || sb.empty()) return;
      for (int ha = 1; ha <= spine - 1; ++ha) {
        int hb = spine - ha;
        for (const SW& a : stacks_of(sa, ha))
          for (const SW& b : stacks_of(sb, hb)) {
            if (Cmp::cmp(a, b) > 0) continue;  // product is commutative
            try_pair(w, a, b, best);
          }
      }
      return;
    }
    for (int t = 0; t <= dist[i].second; ++t) {
      take[i] = t;
      split_rec(w, dist, take, i + 1, spine, best);
    }
    take[i] = 0;
  }

  void try_pair(const SW& w, const SW& a, const SW& b,
                std::optional<Witness>& best) {
    if (best) {  // keep only cmp-smaller candidate pairs
      if (int c = Cmp::cmp(a, best->a); c > 0) return;
      else if (c == 0 && Cmp::cmp(b, best->b) >= 0) return;
    }
    LC p = product(SW::wrap(a), SW::wrap(b));
    if (p.is_zero()) return;
    const auto& [lw, lc] = p.leading();
    if (Cmp::cmp(lw, w) != 0) return;
    if (!is_positive_integer(lc))
      throw domain_error("leading coefficient of R(a)R(b) is not a positive integer");
    Witness wit;
    wit.k = rational_to_uint(lc);
    wit.a = a;
    wit.b = b;
    wit.residual = LC::term(w, lc) - p;
    best = std::move(wit);
  }

  // All stacks over the letter multiset `ms` with exactly `h` levels.
  std::vector<SW> stacks_of(const std::vector<L>& ms, int h) {
    std::vector<std::pair<L, int>> dist;
    for (const auto& x : ms) {
      if (!dist.empty() && Tr::cmp(dist.back().first, x) == 0)
        ++dist.back().second;
      else
        dist.emplace_back(x, 1);
    }
    std::vector<std::vector<L>> lv(h);
    std::vector<SW> out;
    place_rec(dist, 0, lv, out);
    return out;
  }

  void place_rec(const std::vector<std::pair<L, int>>& dist, std::size_t i,
                 std::vector<std::vector<L>>& lv, std::vector<SW>& out) {
    if (i == dist.size()) {
      if (lv.back().empty()) return;
      out.push_back(SW::make(lv));
      return;
    }
    comp_rec(dist, i, dist[i].second, 0, lv, out);
  }

  void comp_rec(const std::vector<std::pair<L, int>>& dist, std::size_t i,
                int remaining, std::size_t slot, std::vector<std::vector<L>>& lv,
                std::vector<SW>& out) {
    if (slot + 1 == lv.size()) {
      for (int t = 0; t < remaining; ++t) lv[slot].push_back(dist[i].first);
      place_rec(dist, i + 1, lv, out);
      for (int t = 0; t < remaining; ++t) lv[slot].pop_back();
      return;
    }
    for (int t = 0; t <= remaining; ++t) {
      for (int q = 0; q < t; ++q) lv[slot].push_back(dist[i].first);
      comp_rec(dist, i, remaining - t, slot + 1, lv, out);
      for (int q = 0; q < t; ++q) lv[slot].pop_back();
    }
  }

  OpLaw law_;
  std::function<void()> tick_;
};

// Plain symbol alphabet for the standalone free commutative RB algebra.
struct SymLetter {
  std::string symbol;
  std::uint32_t rank = 0;
};

struct SymTraits {
  static int cmp(const SymLetter& a, const SymLetter& b) {
    return a.rank < b.rank ? -1 : (a.rank > b.rank ? 1 : 0);
  }
  static int xdeg(const SymLetter&) { return 1; }
  static int rdeg(const SymLetter&) { return 0; }
  static std::size_t hash(const SymLetter& a) { return a.rank * 0x9e3779b1u + 1; }
  static std::string text(const SymLetter& a) { return a.symbol; }
};

using SymStack = StackWord<SymLetter, SymTraits>;
using SymRBCom = RBCom<SymLetter, SymTraits>;

}  // namespace prb
