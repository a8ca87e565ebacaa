#pragma once

#include "affinelab/pbw_module.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace affinelab {

// T_N(sl2) = sl2 ⊗ C[t]/t^{N+1} with the character ψ of h ⊗ C[t]/t^{N+1}.
// theta is the level used when K appears in lifted affine words.
struct TakiffSpec {
  int n = 0;
  std::vector<Rational> psi_values;  // ψ_0..ψ_N
  Rational theta = 0;
};

void validate_takiff(const TakiffSpec& spec);

// Vectors of V(ψ) reuse GammaTriple with only the f-block populated.
using TakiffVector = ModuleVector;

// Action of x ⊗ t^a, 0 <= a <= N, on V(ψ). K acts by theta.
TakiffVector takiff_act(const TakiffSpec& spec, const Generator& g, const TakiffVector& v);

struct WilsonScan {
  int depth = 0;
  bool found = false;                 // a singular vector of f-length 1..depth exists
  std::vector<int> dimension_by_length;  // index L-1
  std::vector<TakiffVector> witnesses;
  bool predicted_reducible = false;
  bool expected_within_depth = false;  // predicted witness fits in the scanned lengths
  bool consistent = false;
  std::string rule;
};

// Weight vectors w ∉ Cu with (e ⊗ t^k) w = 0 for 0 <= k <= N and
// (h ⊗ t^k - ψ_k) w = 0 for 1 <= k <= N. Each f-length is one weight space.
WilsonScan wilson_scan(const TakiffSpec& spec, int depth);

WhittakerDatum affine_correspondence(const TakiffSpec& spec);

struct IntertwineResult {
  int samples = 0;
  int failures = 0;
  std::optional<std::string> first_failure;
  bool passed() const { return failures == 0; }
};

// Random words (length 1..4) in e, f, h with modes in [0, N+1] and K,
// evaluated on M̂(φ_N) and on V(ψ) (modes > N map to zero).
IntertwineResult intertwine_check(const TakiffSpec& spec, int samples, std::uint64_t seed);

}  // namespace affinelab
