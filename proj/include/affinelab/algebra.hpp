#pragma once

#include "affinelab/combination.hpp"
#include "affinelab/errors.hpp"
#include "affinelab/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace affinelab {

enum class GenKind { E, F, H, K, D };

// Basis element of the extended affine algebra: x(n) = x ⊗ t^n, the central
// element K, or the degree derivation d. K and d always carry mode 0.
struct Generator {
  GenKind kind = GenKind::K;
  int mode = 0;

  static Generator e(int n) { return {GenKind::E, n}; }
  static Generator f(int n) { return {GenKind::F, n}; }
  static Generator h(int n) { return {GenKind::H, n}; }
  static Generator K() { return {GenKind::K, 0}; }
  static Generator d() { return {GenKind::D, 0}; }

  bool has_mode() const { return kind == GenKind::E || kind == GenKind::F || kind == GenKind::H; }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

std::string to_string(const Generator& g);

using GeneratorCombo = Combination<Generator>;

// The character φ of S_{N1,N2}: caps (n1, n2), level kappa and the values
// φ(h(0)), ..., φ(h(n1+n2+1)). Everything else about φ is forced.
struct WhittakerDatum {
  int n1 = -1;
  int n2 = 1;
  Rational kappa = 0;
  std::vector<Rational> h_values;

  int top_index() const { return n1 + n2 + 1; }
  // φ(h(k)) for k >= 0, zero past the stored range.
  Rational h_value(int k) const;
  bool is_reduced() const { return n1 == -1; }

  friend bool operator==(const WhittakerDatum&, const WhittakerDatum&) = default;
};

struct HomViolation {
  std::string reason;
  std::optional<int> index;  // offending h-index, when there is one
};

// Builds a datum from a possibly longer value list: trailing entries past
// n1+n2+1 must be zero and are dropped. Throws PreconditionError naming the
// first offending index otherwise.
WhittakerDatum make_datum(int n1, int n2, const Rational& kappa, std::vector<Rational> values);

std::optional<HomViolation> validate_hom(const WhittakerDatum& phi);

// Bracket in the extended affine algebra with [h,e]=2e, [h,f]=-2f, [e,f]=h,
// (e|f)=1, (h|h)=2 and [d, x(m)] = m x(m).
GeneratorCombo bracket(const Generator& x, const Generator& y);
GeneratorCombo bracket(const GeneratorCombo& x, const GeneratorCombo& y);

// Membership in S_{N1,N2}: h(n), n>=0; e(n), n>n1; f(n), n>n2; K.
bool in_subalgebra(const WhittakerDatum& phi, const Generator& g);

// φ(g) for g in S_{N1,N2}; nullopt otherwise.
std::optional<Rational> hom_value(const WhittakerDatum& phi, const Generator& g);

struct SpectralFlow {
  int k = 0;
  SpectralFlow compose(const SpectralFlow& other) const { return {k + other.k}; }
};

// σ_k(e(n)) = e(n+k), σ_k(f(n)) = f(n-k), σ_k(h(n)) = h(n) + δ_{n,0} k K,
// σ_k(K) = K. Throws PreconditionError on d.
GeneratorCombo twist_generator(const SpectralFlow& sigma, const Generator& g);
GeneratorCombo twist_combo(const SpectralFlow& sigma, const GeneratorCombo& x);

// φ∘σ_k as a character of S_{n1-k, n2+k}.
WhittakerDatum twist_hom(const WhittakerDatum& phi, int k);

}  // namespace affinelab
