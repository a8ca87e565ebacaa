#pragma once

#include "affinelab/algebra.hpp"
#include "affinelab/gamma.hpp"

#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace affinelab {

// Extra margin added to every internal summation or constraint range. Results
// must not depend on it; the widening tests compare widen = 0 against 10.
struct Truncation {
  int widen = 0;
};

// A smooth module of the affine algebra realized on PBW-indexed vectors.
class Representation {
 public:
  virtual ~Representation() = default;

  // d is never accepted here; extended modules handle it separately.
  virtual ModuleVector act(const Generator& g, const ModuleVector& v) const = 0;
  // B with x(p) v = 0 for all x in {e,f,h} and p > B.
  virtual int annihilation_bound(const ModuleVector& v) const = 0;
  virtual Rational level() const = 0;

  // word[0] is the leftmost letter, so the last letter acts first.
  ModuleVector act_word(const std::vector<Generator>& word, const ModuleVector& v) const;
  ModuleVector act_combo(const GeneratorCombo& x, const ModuleVector& v) const;
};

// The induced module M̂(φ) with basis X(γ)u, γ = (gp, g0, gm) capped by
// (n1, -1, n2).
class Module final : public Representation {
 public:
  explicit Module(WhittakerDatum phi);
  Module(const Module&) = delete;
  Module& operator=(const Module&) = delete;

  const WhittakerDatum& phi() const { return phi_; }
  bool reduced() const { return phi_.n1 == -1; }
  // Largest mode that can appear in a basis index or carry a nonzero φ-value.
  int mode_cap() const;

  bool is_module_generator(const Generator& g) const;
  bool is_basis_index(const GammaTriple& g) const;

  Rational weight_of(const GammaTriple& g) const;
  // ℓ(γ)·N - ht(γ); reduced modules only.
  int true_height(const GammaTriple& g) const;
  // ℓ(γ)·mode_cap() - ht(γ); agrees with true_height on reduced modules.
  long cap_height(const GammaTriple& g) const;

  // Deterministic report order: (Ht, ℓ, gm, g0, gp).
  bool report_less(const GammaTriple& a, const GammaTriple& b) const;
  std::vector<std::pair<GammaTriple, Rational>> ordered_terms(const ModuleVector& v) const;

  const ModuleVector& act_monomial(const Generator& g, const GammaTriple& gamma) const;
  ModuleVector act(const Generator& g, const ModuleVector& v) const override;
  int annihilation_bound(const ModuleVector& v) const override;
  Rational level() const override { return phi_.kappa; }

  std::size_t cache_size() const;

 private:
  struct Key {
    Generator g;
    GammaTriple gamma;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  ModuleVector compute(const Generator& g, const GammaTriple& gamma) const;

  WhittakerDatum phi_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Key, ModuleVector, KeyHash> memo_;
};

}  // namespace affinelab
