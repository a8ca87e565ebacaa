#include "affinelab/checks.hpp"

#include "affinelab/singular.hpp"
#include "affinelab/sugawara.hpp"

namespace affinelab {

void CheckResult::record(bool ok, const std::string& what) {
  ++samples;
  if (ok) return;
  ++failures;
  if (!first_failure) first_failure = what;
}

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Sampler::small_rational() {
  int p = 0;
  while (p == 0) p = uniform(-5, 5);
  Rational r(p, uniform(1, 3));
  r.canonicalize();
  return r;
}

Generator Sampler::affine_generator(int max_mode) {
  const int mode = uniform(-max_mode, max_mode);
  switch (uniform(0, 2)) {
    case 0: return Generator::e(mode);
    case 1: return Generator::f(mode);
    default: return Generator::h(mode);
  }
}

ModuleVector Sampler::vector(const std::vector<GammaTriple>& corpus) {
  ModuleVector v;
  const int terms = uniform(1, 3);
  for (int i = 0; i < terms; ++i) {
    v.add(corpus[static_cast<std::size_t>(uniform(0, static_cast<int>(corpus.size()) - 1))], small_rational());
  }
  if (v.empty()) v = monomial(corpus.front());
  return v;
}

std::vector<GammaTriple> corpus(const Module& m, int h_max, int l_max) {
  return enumerate_basis(m, TruncationWindow{h_max, l_max, std::nullopt});
}

namespace {

std::vector<Generator> generators_up_to(int max_mode) {
  std::vector<Generator> out{Generator::K(), Generator::d()};
  for (int n = -max_mode; n <= max_mode; ++n) {
    out.push_back(Generator::e(n));
    out.push_back(Generator::f(n));
    out.push_back(Generator::h(n));
  }
  return out;
}

std::string word_string(const std::vector<Generator>& w) {
  std::string s;
  for (const auto& g : w) s += (s.empty() ? "" : " ") + to_string(g);
  return s;
}

}  // namespace

CheckResult bracket_axioms(int max_mode) {
  CheckResult res{"bracket axioms", 0, 0, std::nullopt};
  const auto gens = generators_up_to(max_mode);
  for (const auto& x : gens)
    for (const auto& y : gens) {
      res.record(bracket(x, y) == -bracket(y, x), "antisymmetry fails for " + to_string(x) + ", " + to_string(y));
    }
  const auto small = generators_up_to(std::min(max_mode, 6));
  for (const auto& x : small)
    for (const auto& y : small)
      for (const auto& z : small) {
        const GeneratorCombo X = GeneratorCombo::single(x), Y = GeneratorCombo::single(y),
                             Z = GeneratorCombo::single(z);
        GeneratorCombo j = bracket(X, bracket(Y, Z));
        j += bracket(Y, bracket(Z, X));
        j += bracket(Z, bracket(X, Y));
        res.record(j.empty(), "Jacobi fails for " + to_string(x) + ", " + to_string(y) + ", " + to_string(z));
      }
  return res;
}

CheckResult hom_vanishing(const WhittakerDatum& phi, int samples, std::uint64_t seed) {
  CheckResult res{"phi vanishes on [S,S]", 0, 0, std::nullopt};
  Sampler rng(seed);
  const int hi = phi.n1 + phi.n2 + 6;
  auto member = [&]() {
    switch (rng.uniform(0, 3)) {
      case 0: return Generator::h(rng.uniform(0, hi));
      case 1: return Generator::e(rng.uniform(phi.n1 + 1, hi));
      case 2: return Generator::f(rng.uniform(phi.n2 + 1, hi));
      default: return Generator::K();
    }
  };
  for (int s = 0; s < samples; ++s) {
    const Generator x = member(), y = member();
    Rational total = 0;
    bool inside = true;
    for (const auto& [g, c] : bracket(x, y)) {
      auto v = hom_value(phi, g);
      if (!v) {
        inside = false;
        break;
      }
      total += c * *v;
    }
    res.record(inside && is_zero(total), "phi([" + to_string(x) + ", " + to_string(y) + "]) != 0");
  }
  return res;
}

CheckResult module_axiom_fuzz(const Representation& rep, const std::vector<GammaTriple>& corpus, int samples,
                              int max_mode, std::uint64_t seed) {
  CheckResult res{"module axiom", 0, 0, std::nullopt};
  Sampler rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Generator x = rng.uniform(0, 19) == 0 ? Generator::K() : rng.affine_generator(max_mode);
    const Generator y = rng.affine_generator(max_mode);
    const ModuleVector v = rng.vector(corpus);
    ModuleVector lhs = rep.act(x, rep.act(y, v));
    lhs -= rep.act(y, rep.act(x, v));
    const ModuleVector rhs = rep.act_combo(bracket(x, y), v);
    res.record(lhs == rhs, "[" + to_string(x) + ", " + to_string(y) + "] on " + to_string(v));
  }
  return res;
}

GammaTriple shift_index(const GammaTriple& g, int k) {
  GammaTriple out = g;
  for (int& m : out.gp) m += k;
  for (int& m : out.gm) m -= k;
  return out;
}

CheckResult twist_check(const WhittakerDatum& phi, int samples, std::uint64_t seed, int max_len) {
  CheckResult res{"twist equivalence", 0, 0, std::nullopt};
  const int k = phi.n1 + 1;
  const SpectralFlow sigma{k};
  Module original(phi);
  Module reduced(twist_hom(phi, k));
  Sampler rng(seed);
  const int lo = -3, hi = original.mode_cap() + 3;
  for (int s = 0; s < samples; ++s) {
    std::vector<Generator> word;
    const int len = rng.uniform(1, max_len);
    for (int i = 0; i < len; ++i) {
      const int mode = rng.uniform(lo, hi);
      switch (rng.uniform(0, 9)) {
        case 0: word.push_back(Generator::K()); break;
        case 1: case 2: case 3: word.push_back(Generator::e(mode)); break;
        case 4: case 5: case 6: word.push_back(Generator::f(mode)); break;
        default: word.push_back(Generator::h(mode)); break;
      }
    }
    ModuleVector lhs;
    for (const auto& [g, c] : reduced.act_word(word, unit_vector())) lhs.add(shift_index(g, k), c);
    ModuleVector rhs = unit_vector();
    for (auto it = word.rbegin(); it != word.rend(); ++it) rhs = original.act_combo(twist_generator(sigma, *it), rhs);
    res.record(lhs == rhs, "word " + word_string(word));
  }
  return res;
}

CheckResult centrality_check(const Representation& rep, const std::vector<GammaTriple>& corpus, int samples,
                             std::uint64_t seed, Truncation t) {
  CheckResult res{"T(n) centrality", 0, 0, std::nullopt};
  Sampler rng(seed);
  for (int s = 0; s < samples; ++s) {
    const int n = rng.uniform(-5, 5);
    const Generator x = rng.affine_generator(5);
    const ModuleVector v = rng.vector(corpus);
    const ModuleVector lhs = apply_T(rep, n, rep.act(x, v), t);
    const ModuleVector rhs = rep.act(x, apply_T(rep, n, v, t));
    res.record(lhs == rhs, "T(" + std::to_string(n) + ") vs " + to_string(x) + " on " + to_string(v));
  }
  return res;
}

CheckResult virasoro_check(const Representation& rep, const std::vector<GammaTriple>& corpus, int samples,
                           std::uint64_t seed, Truncation t) {
  CheckResult res{"Virasoro relations", 0, 0, std::nullopt};
  Sampler rng(seed);
  const Rational kappa = rep.level();
  for (int s = 0; s < samples; ++s) {
    const int m = 1 + s % 2;
    const Generator x = rng.affine_generator(3);
    const ModuleVector v = rng.vector(corpus);

    ModuleVector lx = apply_L(rep, m, rep.act(x, v), t);
    lx -= rep.act(x, apply_L(rep, m, v, t));
    Generator shifted = x;
    shifted.mode += m;
    const ModuleVector want_x = rep.act(shifted, v) * Rational(-x.mode);
    res.record(lx == want_x, "[L(" + std::to_string(m) + "), " + to_string(x) + "] on " + to_string(v));

    ModuleVector ll = apply_L(rep, m, apply_L(rep, -m, v, t), t);
    ll -= apply_L(rep, -m, apply_L(rep, m, v, t), t);
    ModuleVector want_l = apply_L(rep, 0, v, t) * Rational(2 * m);
    want_l.add_scaled(v, kappa * (m * m * m - m) / (4 * (kappa + 2)));
    res.record(ll == want_l, "[L(" + std::to_string(m) + "), L(" + std::to_string(-m) + ")] on " + to_string(v));
  }
  return res;
}

namespace {

TildeVector sample_tilde(Sampler& rng, const std::vector<GammaTriple>& corpus, int d_max) {
  TildeVector v;
  const int terms = rng.uniform(1, 3);
  for (int i = 0; i < terms; ++i) {
    const auto& g = corpus[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(corpus.size()) - 1))];
    v.add(TildeKey{rng.uniform(0, d_max), g}, rng.small_rational());
  }
  if (v.empty()) v = TildeVector::single(TildeKey{0, corpus.front()});
  return v;
}

}  // namespace

CheckResult casimir_centrality(const TildeModule& tm, const std::vector<GammaTriple>& corpus, int samples,
                               std::uint64_t seed, int d_max) {
  CheckResult res{"Omega centrality", 0, 0, std::nullopt};
  Sampler rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Generator g = rng.uniform(0, 9) == 0 ? Generator::d() : rng.affine_generator(4);
    const TildeVector v = sample_tilde(rng, corpus, d_max);
    const TildeVector lhs = tm.apply_casimir(tm.act(g, v));
    const TildeVector rhs = tm.act(g, tm.apply_casimir(v));
    res.record(lhs == rhs, "Omega vs " + to_string(g) + " on " + to_string(v));
  }
  return res;
}

CheckResult tilde_axiom_fuzz(const TildeModule& tm, const std::vector<GammaTriple>& corpus, int samples,
                             std::uint64_t seed, int d_max) {
  CheckResult res{"extended module axiom", 0, 0, std::nullopt};
  Sampler rng(seed);
  const int top = tm.variant() == TildeVariant::LAMBDA_QUOTIENT ? 0 : d_max;
  for (int s = 0; s < samples; ++s) {
    const Generator x = rng.uniform(0, 3) == 0 ? Generator::d() : rng.affine_generator(4);
    const Generator y = rng.affine_generator(4);
    const TildeVector v = sample_tilde(rng, corpus, top);
    TildeVector lhs = tm.act(x, tm.act(y, v));
    lhs -= tm.act(y, tm.act(x, v));
    TildeVector rhs;
    for (const auto& [g, c] : bracket(x, y)) rhs.add_scaled(tm.act(g, v), c);
    res.record(lhs == rhs, "[" + to_string(x) + ", " + to_string(y) + "] on " + to_string(v));
  }
  return res;
}

}  // namespace affinelab
