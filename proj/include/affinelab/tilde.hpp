#pragma once

#include "affinelab/singular.hpp"

#include <compare>
#include <optional>
#include <string>

namespace affinelab {

enum class TildeVariant { FREE_D, LAMBDA_QUOTIENT, CRITICAL_INDUCED };
std::string to_string(TildeVariant v);

// d^k ⊗ X(γ)u
struct TildeKey {
  int d = 0;
  GammaTriple gamma;
  friend auto operator<=>(const TildeKey&, const TildeKey&) = default;
};

using TildeVector = Combination<TildeKey>;

TildeVector embed(const ModuleVector& w, int d_exp = 0);
// Component at one d-exponent.
ModuleVector component(const TildeVector& v, int d_exp);
std::string to_string(const TildeVector& v);

// C[d] ⊗ base with the extended action. The base is M̂(φ) for FREE_D and
// LAMBDA_QUOTIENT and the critical quotient for CRITICAL_INDUCED; shape is the
// underlying M̂(φ) used for weights and ordering. Both must outlive this.
class TildeModule {
 public:
  TildeModule(const Representation& base, const Module& shape, TildeVariant variant,
              std::optional<Rational> lambda = std::nullopt, Truncation t = {});

  TildeVariant variant() const { return variant_; }
  const Module& shape() const { return shape_; }
  const Representation& base() const { return base_; }
  Rational level() const { return base_.level(); }

  TildeVector act(const Generator& g, const TildeVector& v) const;
  TildeVector act_word(const std::vector<Generator>& word, const TildeVector& v) const;

  // Ω - 2(κ+2)d, i.e. ½h(0)² + h(0) + 2f(0)e(0)
  //   + 2 Σ_{n>=1} (e(-n)f(n) + f(-n)e(n) + ½h(-n)h(n)), on the base.
  ModuleVector omega_rest(const ModuleVector& w) const;
  // Ω = 2dK + 4d + Ω_rest letter by letter through act; FREE_D and
  // CRITICAL_INDUCED only.
  TildeVector apply_casimir(const TildeVector& v) const;

 private:
  int casimir_range(const ModuleVector& w) const;

  const Representation& base_;
  const Module& shape_;
  TildeVariant variant_;
  Rational lambda_;
  Truncation trunc_;
};

using TildeSingularReport = BasicSingularReport<TildeVector>;

// Basis d^k ⊗ X(γ), k <= d_max (d_max is ignored for LAMBDA_QUOTIENT, whose
// carrier is exponent 0 only).
TildeSingularReport tilde_singular_space(const TildeModule& tm, const TruncationWindow& window, int d_max,
                                         Truncation t = {});

}  // namespace affinelab
