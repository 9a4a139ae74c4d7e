#pragma once

// Independent oracles used to freeze expected values: they share no code
// with the engine paths they check.

#include <map>
#include <vector>

#include "engine.hpp"

namespace oracles {

using prb::AtomKind;
using prb::LiePtr;
using prb::LinComb;
using prb::Rational;
using prb::WordPtr;

// --- associative envelope ---------------------------------------------------
// Expand a bracket tree over generator leaves into the free associative
// algebra: [u, v] -> uv - vu on words of generator ranks. Faithful for
// elements of the free Lie algebra (PBW), so it decides equality of pure-Lie
// expressions independently of the Hall rewriting.

using AssocPoly = std::map<std::vector<std::uint32_t>, Rational>;

inline void assoc_add(AssocPoly& p, const std::vector<std::uint32_t>& w,
                      const Rational& c) {
  auto& v = p[w];
  v += c;
  if (v == 0) p.erase(w);
}

inline AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      std::vector<std::uint32_t> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      assoc_add(r, w, ca * cb);
    }
  return r;
}

inline AssocPoly assoc_of_tree(const LiePtr& t) {
  if (t->is_leaf()) {
    if (t->atom->kind != AtomKind::Gen)
      throw prb::domain_error("assoc oracle handles generator leaves only");
    return AssocPoly{{{t->atom->gen.rank}, Rational(1)}};
  }
  AssocPoly l = assoc_of_tree(t->left);
  AssocPoly r = assoc_of_tree(t->right);
  AssocPoly lr = assoc_mul(l, r), rl = assoc_mul(r, l);
  for (const auto& [w, c] : rl) assoc_add(lr, w, -c);
  return lr;
}

// engine results over pure generators are combinations of single-factor
// Lie words (or generator words); expand them the same way
inline AssocPoly assoc_of_comb(const LinComb& c) {
  AssocPoly r;
  for (const auto& [w, k] : c) {
    if (w->factors.size() != 1)
      throw prb::domain_error("assoc oracle expects single-factor words");
    const auto& a = w->factors[0];
    AssocPoly p;
    if (a->kind == AtomKind::Gen)
      p = AssocPoly{{{a->gen.rank}, Rational(1)}};
    else if (a->kind == AtomKind::Lie)
      p = assoc_of_tree(a->lie);
    else
      throw prb::domain_error("assoc oracle expects generator or Lie factors");
    for (const auto& [word, coeff] : p) assoc_add(r, word, coeff * k);
  }
  return r;
}

// --- multilinear dimension of Com(Lie) --------------------------------------
// Brute force: the multilinear component of the free Lie algebra on b
// letters is spanned by all bracketings of all permutations; its dimension
// is the rank of their associative expansions. The free Poisson multilinear
// dimension is the sum over set partitions of the product of block Lie
// dimensions.

inline std::vector<LiePtr> all_trees(const std::vector<std::uint32_t>& elems) {
  std::vector<LiePtr> out;
  if (elems.size() == 1) {
    out.push_back(prb::lie_leaf(prb::make_gen("g" + std::to_string(elems[0]),
                                              elems[0])));
    return out;
  }
  // split into nonempty ordered (left, right) preserving element order is
  // not enough: enumerate subsets for the left side
  const std::size_t n = elems.size();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<std::uint32_t> l, r;
    for (std::size_t i = 0; i < n; ++i)
      ((mask >> i) & 1u ? l : r).push_back(elems[i]);
    for (const auto& lt : all_trees(l))
      for (const auto& rt : all_trees(r)) out.push_back(prb::lie_node(lt, rt));
  }
  return out;
}

inline int lie_multilinear_dim(int b) {
  std::vector<std::uint32_t> elems;
  for (int i = 0; i < b; ++i) elems.push_back(static_cast<std::uint32_t>(i));
  std::vector<AssocPoly> rows;
  for (const auto& t : all_trees(elems)) rows.push_back(assoc_of_tree(t));
  // rank by elimination on the lexicographically largest word
  std::vector<AssocPoly> basis;
  for (AssocPoly v : rows) {
    while (!v.empty()) {
      auto lead = std::prev(v.end());
      const AssocPoly* hit = nullptr;
      for (const auto& p : basis)
        if (std::prev(p.end())->first == lead->first) {
          hit = &p;
          break;
        }
      if (!hit) {
        basis.push_back(v);
        break;
      }
      Rational f = lead->second / std::prev(hit->end())->second;
      for (const auto& [w, c] : *hit) assoc_add(v, w, -c * f);
    }
  }
  return static_cast<int>(basis.size());
}

// set partitions of {0..n-1} via restricted growth strings
inline void partitions_rec(int n, int i, std::vector<int>& rgs, int maxb,
                           std::vector<std::vector<int>>& out) {
  if (i == n) {
    out.push_back(rgs);
    return;
  }
  for (int b = 0; b <= maxb + 1; ++b) {
    rgs[i] = b;
    partitions_rec(n, i + 1, rgs, std::max(maxb, b), out);
  }
}

inline long compose_lie_multilinear_dim(int n) {
  std::vector<std::vector<int>> parts;
  std::vector<int> rgs(n, 0);
  if (n == 0) return 0;
  rgs[0] = 0;
  partitions_rec(n, 1, rgs, 0, parts);
  if (parts.empty()) parts.push_back(rgs);
  long total = 0;
  for (const auto& p : parts) {
    std::map<int, int> block_sizes;
    for (int i = 0; i < n; ++i) block_sizes[p[i]]++;
    long prod = 1;
    for (const auto& [blk, sz] : block_sizes) prod *= lie_multilinear_dim(sz);
    total += prod;
  }
  return total;
}

// --- operator-degree by text traversal --------------------------------------
inline int rdeg_by_text(const std::string& text, char opsym) {
  int n = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i)
    if (text[i] == opsym && text[i + 1] == '(') ++n;
  return n;
}

}  // namespace oracles
