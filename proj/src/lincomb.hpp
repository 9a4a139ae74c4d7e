#pragma once

#include <map>
#include <utility>

#include "scalar.hpp"
#include "term.hpp"

namespace prb {

// A finite formal sum of basis keys with exact rational coefficients. Keys
// are stored descending in the term order, so begin() is the leading term.
// Zero coefficients are never stored.
template <class K, class Cmp3>
class LinCombT {
 public:
  struct Desc {
    bool operator()(const K& a, const K& b) const { return Cmp3{}(a, b) > 0; }
  };
  using Terms = std::map<K, Rational, Desc>;

  LinCombT() = default;

  static LinCombT term(K k, Rational c = Rational(1)) {
    LinCombT r;
    r.add(std::move(k), std::move(c));
    return r;
  }

  void add(K k, Rational c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(std::move(k), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinCombT& operator+=(const LinCombT& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinCombT& operator-=(const LinCombT& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend LinCombT operator+(LinCombT a, const LinCombT& b) { return a += b; }
  friend LinCombT operator-(LinCombT a, const LinCombT& b) { return a -= b; }

  LinCombT operator-() const {
    LinCombT r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }

  LinCombT scaled(const Rational& s) const {
    LinCombT r;
    if (s == 0) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Leading term: the cmp-maximal key with its coefficient.
  const std::pair<const K, Rational>& leading() const {
    if (terms_.empty()) throw domain_error("leading term of zero");
    return *terms_.begin();
  }

  Rational coeff(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool operator==(const LinCombT& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
      if (Cmp3{}(it->first, jt->first) != 0 || it->second != jt->second)
        return false;
    return true;
  }
  bool operator!=(const LinCombT& o) const { return !(*this == o); }

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

 private:
  Terms terms_;
};

struct WordCmp3 {
  int operator()(const WordPtr& a, const WordPtr& b) const {
    return cmp_word(a, b);
  }
};

using LinComb = LinCombT<WordPtr, WordCmp3>;

}  // namespace prb
