#pragma once

#include "affinelab/combination.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace affinelab {

// Weakly increasing mode list; the empty tuple is the zero index.
using GammaTuple = std::vector<int>;

// Index of the PBW monomial X(γ)u = e(gp) h(g0) f(gm) u.
struct GammaTriple {
  GammaTuple gp;
  GammaTuple g0;
  GammaTuple gm;

  bool empty() const { return gp.empty() && g0.empty() && gm.empty(); }
  friend auto operator<=>(const GammaTriple&, const GammaTriple&) = default;
};

struct GammaTripleHash {
  std::size_t operator()(const GammaTriple& g) const noexcept;
};

int length(const GammaTriple& g);
long height(const GammaTriple& g);  // sum of all entries

// γ ⋈ γ': blockwise sorted union.
GammaTriple juxtapose(const GammaTriple& a, const GammaTriple& b);

std::string to_string(const GammaTuple& t);
std::string to_string(const GammaTriple& g);

using ModuleVector = Combination<GammaTriple>;

inline ModuleVector unit_vector() { return ModuleVector::single(GammaTriple{}); }
inline ModuleVector monomial(GammaTriple g, const Rational& c = 1) { return ModuleVector::single(g, c); }

std::string to_string(const ModuleVector& v);

}  // namespace affinelab
