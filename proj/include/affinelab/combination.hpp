#pragma once

#include "affinelab/rational.hpp"

#include <initializer_list>
#include <map>
#include <utility>

namespace affinelab {

// Finite formal linear combination sum c_k * k with exact rational
// coefficients. Zero coefficients are never stored, so the zero element is the
// empty map and equality is structural.
template <class Key>
class Combination {
 public:
  using Terms = std::map<Key, Rational>;
  using const_iterator = typename Terms::const_iterator;

  Combination() = default;
  Combination(std::initializer_list<std::pair<const Key, Rational>> init) {
    for (const auto& [k, c] : init) add(k, c);
  }
  static Combination single(const Key& key, const Rational& coeff = 1) {
    Combination out;
    out.add(key, coeff);
    return out;
  }

  void add(const Key& key, const Rational& coeff) {
    if (affinelab::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (affinelab::is_zero(it->second)) terms_.erase(it);
    }
  }

  void add_scaled(const Combination& other, const Rational& factor) {
    if (affinelab::is_zero(factor)) return;
    for (const auto& [k, c] : other.terms_) add(k, c * factor);
  }

  Combination& operator+=(const Combination& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  Combination& operator*=(const Rational& factor) {
    if (affinelab::is_zero(factor)) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= factor;
    }
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(Combination a, const Rational& f) { return a *= f; }
  friend Combination operator*(const Rational& f, Combination a) { return a *= f; }
  friend Combination operator-(Combination a) { return a *= Rational(-1); }
  friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

  Rational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

 private:
  Terms terms_;
};

}  // namespace affinelab
