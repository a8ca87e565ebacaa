#pragma once

#include "affinelab/singular.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace affinelab {

// Data of M̄(φ; θ) = M̂(φ) / <(T(N-i) - θ_i) u : i >= 1> at κ = -2.
struct CriticalQuotientSpec {
  WhittakerDatum phi;
  std::map<int, Rational> theta;  // θ_i; absent indices mean 0
};

void validate_quotient(const CriticalQuotientSpec& spec);

// Quotient vectors are ModuleVectors supported on γ with an empty h-block.
using QuotientVector = ModuleVector;

class Quotient final : public Representation {
 public:
  // The quotient keeps a reference to the base module, which must outlive it.
  Quotient(const Module& base, CriticalQuotientSpec spec, Truncation t = {});

  const Module& base() const { return base_; }
  const CriticalQuotientSpec& spec() const { return spec_; }
  Rational theta(int i) const;

  // Image of an M̂ vector in M̄, written on the h-free basis.
  QuotientVector reduce(const ModuleVector& v) const;
  // reduce(act(g, v)) for h-free v.
  ModuleVector act(const Generator& g, const ModuleVector& v) const override;
  int annihilation_bound(const ModuleVector& v) const override { return base_.annihilation_bound(v); }
  Rational level() const override { return base_.level(); }

  // Largest i with θ_i read by reduce so far (0 if none).
  int largest_theta_index() const;

 private:
  const QuotientVector& reduce_monomial(const GammaTriple& g, int depth) const;
  QuotientVector reduce_vector(const ModuleVector& v, int depth) const;
  const ModuleVector& substitute(int m) const;  // lift of the class of h(m)u

  const Module& base_;
  CriticalQuotientSpec spec_;
  Truncation trunc_;
  mutable std::recursive_mutex mutex_;
  mutable std::unordered_map<GammaTriple, QuotientVector, GammaTripleHash> memo_;
  mutable std::map<int, ModuleVector> subs_;
  mutable int largest_theta_ = 0;
};

SingularReport quotient_singular_space(const Quotient& q, const TruncationWindow& window, Truncation t = {});

}  // namespace affinelab
