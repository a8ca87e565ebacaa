#pragma once

#include "affinelab/pbw_module.hpp"
#include "affinelab/tilde.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace affinelab {

struct CheckResult {
  std::string name;
  int samples = 0;
  int failures = 0;
  std::optional<std::string> first_failure;

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& what);
};

// Seeded source of random generators and vectors for the fuzz suites.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);
  Rational small_rational();
  // e, f or h with |mode| <= max_mode.
  Generator affine_generator(int max_mode);
  // Sum of 1..3 corpus monomials with small nonzero coefficients.
  ModuleVector vector(const std::vector<GammaTriple>& corpus);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Basis indices of a reduced module with Ht <= h_max and ℓ <= l_max.
std::vector<GammaTriple> corpus(const Module& m, int h_max, int l_max);

CheckResult bracket_axioms(int max_mode);
CheckResult hom_vanishing(const WhittakerDatum& phi, int samples, std::uint64_t seed);

// [x,y]v = x(yv) - y(xv) with |modes| <= max_mode.
CheckResult module_axiom_fuzz(const Representation& rep, const std::vector<GammaTriple>& corpus, int samples,
                              int max_mode, std::uint64_t seed);

// σ_k-twisted words on M̂(twist_hom(φ, k)), k = n1 + 1, against σ_k(W)u in
// M̂(φ), through γ ↦ (γ+ + k, γ0, γ- - k).
CheckResult twist_check(const WhittakerDatum& phi, int samples, std::uint64_t seed, int max_len = 3);
GammaTriple shift_index(const GammaTriple& g, int k);

// T(n) x(m) v = x(m) T(n) v at κ = -2.
CheckResult centrality_check(const Representation& rep, const std::vector<GammaTriple>& corpus, int samples,
                             std::uint64_t seed, Truncation t = {});
// [L(m), x(n)] = -n x(m+n) and [L(m), L(-m)] = 2m L(0) + κ(m³-m)/(4(κ+2)) for m = 1, 2.
CheckResult virasoro_check(const Representation& rep, const std::vector<GammaTriple>& corpus, int samples,
                           std::uint64_t seed, Truncation t = {});
// Ω g = g Ω for sampled affine generators and d.
CheckResult casimir_centrality(const TildeModule& tm, const std::vector<GammaTriple>& corpus, int samples,
                               std::uint64_t seed, int d_max = 2);
// [x, y] = xy - yx on C[d] ⊗ base, including pairs with d.
CheckResult tilde_axiom_fuzz(const TildeModule& tm, const std::vector<GammaTriple>& corpus, int samples,
                             std::uint64_t seed, int d_max = 2);

}  // namespace affinelab
