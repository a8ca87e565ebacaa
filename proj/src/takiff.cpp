#include "affinelab/takiff.hpp"

#include "affinelab/linalg.hpp"
#include "affinelab/singular.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace affinelab {

void validate_takiff(const TakiffSpec& spec) {
  if (spec.n < 0) throw PreconditionError("Takiff order N must be nonnegative");
  if (spec.psi_values.size() != static_cast<std::size_t>(spec.n + 1)) {
    throw PreconditionError("psi needs exactly N+1 = " + std::to_string(spec.n + 1) + " values");
  }
}

namespace {

// x ⊗ t^a acting on f(γ)u_ψ, gamma = the sorted f-modes.
TakiffVector act_on_monomial(const TakiffSpec& spec, const Generator& g, const GammaTuple& gamma) {
  if (g.kind == GenKind::K) return monomial(GammaTriple{{}, {}, gamma}, canonical(spec.theta));
  if (gamma.empty()) {
    switch (g.kind) {
      case GenKind::F: return monomial(GammaTriple{{}, {}, {g.mode}});
      case GenKind::H: return monomial(GammaTriple{}, canonical(spec.psi_values[static_cast<std::size_t>(g.mode)]));
      default: return {};
    }
  }
  if (g.kind == GenKind::F) {
    GammaTuple out = gamma;
    out.insert(std::upper_bound(out.begin(), out.end(), g.mode), g.mode);
    return monomial(GammaTriple{{}, {}, out});
  }
  // x f(m) rest = f(m) (x rest) + [x, f(m)] rest, brackets truncated past N.
  const int m = gamma.front();
  const GammaTuple rest(gamma.begin() + 1, gamma.end());
  TakiffVector out;
  for (const auto& [key, c] : act_on_monomial(spec, g, rest)) {
    out.add_scaled(act_on_monomial(spec, Generator::f(m), key.gm), c);
  }
  const int sum = g.mode + m;
  if (sum <= spec.n) {
    for (const auto& [x, c] : bracket(g, Generator::f(m))) {
      if (x.kind == GenKind::K) continue;  // (x|f) a δ_{a+m,0} vanishes for a, m >= 0
      for (const auto& [key, c2] : act_on_monomial(spec, x, rest)) {
        out.add(GammaTriple{{}, {}, key.gm}, c * c2);
      }
    }
  }
  return out;
}

}  // namespace

TakiffVector takiff_act(const TakiffSpec& spec, const Generator& g, const TakiffVector& v) {
  validate_takiff(spec);
  if (g.kind == GenKind::D) throw PreconditionError("d is not in the Takiff algebra");
  if (g.has_mode() && (g.mode < 0 || g.mode > spec.n)) {
    throw PreconditionError("Takiff mode " + std::to_string(g.mode) + " outside [0, N]");
  }
  TakiffVector out;
  for (const auto& [key, c] : v) {
    if (!key.gp.empty() || !key.g0.empty()) throw PreconditionError("V(psi) vectors carry only f-modes");
    out.add_scaled(act_on_monomial(spec, g, key.gm), c);
  }
  return out;
}

WilsonScan wilson_scan(const TakiffSpec& spec, int depth) {
  validate_takiff(spec);
  if (depth < 1) throw PreconditionError("wilson_scan needs depth >= 1");
  WilsonScan scan;
  scan.depth = depth;

  std::vector<std::function<TakiffVector(const GammaTriple&)>> ops;
  for (int k = 0; k <= spec.n; ++k) {
    ops.push_back([&spec, k](const GammaTriple& g) { return takiff_act(spec, Generator::e(k), monomial(g)); });
  }
  for (int k = 1; k <= spec.n; ++k) {
    ops.push_back([&spec, k](const GammaTriple& g) {
      TakiffVector v = monomial(g);
      TakiffVector img = takiff_act(spec, Generator::h(k), v);
      img.add_scaled(v, -canonical(spec.psi_values[static_cast<std::size_t>(k)]));
      return img;
    });
  }

  for (int len = 1; len <= depth; ++len) {
    std::vector<GammaTriple> basis;
    GammaTuple cur;
    std::function<void(int)> gen = [&](int start) {
      if (static_cast<int>(cur.size()) == len) {
        basis.push_back(GammaTriple{{}, {}, cur});
        return;
      }
      for (int m = start; m <= spec.n; ++m) {
        cur.push_back(m);
        gen(m);
        cur.pop_back();
      }
    };
    gen(0);
    auto kernel = solve_kernel(basis, ops);
    scan.dimension_by_length.push_back(static_cast<int>(kernel.size()));
    for (auto& w : kernel) scan.witnesses.push_back(std::move(w));
  }
  scan.found = !scan.witnesses.empty();

  const Rational top = canonical(spec.psi_values.back());
  if (spec.n >= 1) {
    scan.rule = "N >= 1: reducible iff psi_N = 0; witness (f t^N) u at length 1";
    scan.predicted_reducible = is_zero(top);
    scan.expected_within_depth = scan.predicted_reducible;
  } else {
    // sl2 Verma module: f^{m+1}u is singular iff ψ_0 = m ∈ Z>=0.
    scan.rule = "N = 0: reducible iff psi_0 in Z>=0; witness f^(psi_0+1) u";
    scan.predicted_reducible = top.get_den() == 1 && top >= 0;
    scan.expected_within_depth = scan.predicted_reducible && top + 1 <= depth;
  }
  scan.consistent = scan.found == scan.expected_within_depth;
  return scan;
}

WhittakerDatum affine_correspondence(const TakiffSpec& spec) {
  validate_takiff(spec);
  // φ_N(h(N+1)) = 0 is the trailing zero that make_datum drops.
  std::vector<Rational> values;
  for (const auto& v : spec.psi_values) values.push_back(canonical(v));
  values.push_back(0);
  return make_datum(-1, spec.n, canonical(spec.theta), std::move(values));
}

IntertwineResult intertwine_check(const TakiffSpec& spec, int samples, std::uint64_t seed) {
  validate_takiff(spec);
  const WhittakerDatum phi = affine_correspondence(spec);
  Module affine(phi);
  std::mt19937_64 rng(seed);
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  IntertwineResult res;
  res.samples = samples;
  for (int s = 0; s < samples; ++s) {
    std::vector<Generator> word;
    const int len = pick(1, 4);
    for (int i = 0; i < len; ++i) {
      const int kind = pick(0, 3);
      const int mode = pick(0, spec.n + 1);
      switch (kind) {
        case 0: word.push_back(Generator::e(mode)); break;
        case 1: word.push_back(Generator::f(mode)); break;
        case 2: word.push_back(Generator::h(mode)); break;
        default: word.push_back(Generator::K()); break;
      }
    }
    const ModuleVector lhs = affine.act_word(word, unit_vector());
    TakiffVector rhs = unit_vector();
    for (auto it = word.rbegin(); it != word.rend() && !rhs.empty(); ++it) {
      rhs = (it->has_mode() && it->mode > spec.n) ? TakiffVector{} : takiff_act(spec, *it, rhs);
    }
    if (!(lhs == rhs)) {
      ++res.failures;
      if (!res.first_failure) {
        std::string w;
        for (const auto& g : word) w += to_string(g) + " ";
        res.first_failure = "word " + w + "gives " + to_string(lhs) + " vs " + to_string(rhs);
      }
    }
  }
  return res;
}

}  // namespace affinelab
