#include "affinelab/pbw_module.hpp"

#include <algorithm>
#include <tuple>

namespace affinelab {

ModuleVector Representation::act_word(const std::vector<Generator>& word, const ModuleVector& v) const {
  ModuleVector out = v;
  for (auto it = word.rbegin(); it != word.rend() && !out.empty(); ++it) out = act(*it, out);
  return out;
}

ModuleVector Representation::act_combo(const GeneratorCombo& x, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [g, c] : x) {
    if (g.kind == GenKind::K) {
      out.add_scaled(v, c * level());
    } else {
      out.add_scaled(act(g, v), c);
    }
  }
  return out;
}

Module::Module(WhittakerDatum phi) : phi_(std::move(phi)) {
  phi_.kappa.canonicalize();
  for (auto& v : phi_.h_values) v.canonicalize();
  if (auto bad = validate_hom(phi_)) throw PreconditionError("invalid Whittaker datum: " + bad->reason);
}

int Module::mode_cap() const { return std::max({phi_.n1, phi_.n2, phi_.n1 + phi_.n2 + 1}); }

bool Module::is_module_generator(const Generator& g) const {
  switch (g.kind) {
    case GenKind::E: return g.mode <= phi_.n1;
    case GenKind::H: return g.mode <= -1;
    case GenKind::F: return g.mode <= phi_.n2;
    default: return false;
  }
}

bool Module::is_basis_index(const GammaTriple& g) const {
  auto ok = [](const GammaTuple& t, int cap) {
    return std::is_sorted(t.begin(), t.end()) && (t.empty() || t.back() <= cap);
  };
  return ok(g.gp, phi_.n1) && ok(g.g0, -1) && ok(g.gm, phi_.n2);
}

Rational Module::weight_of(const GammaTriple& g) const {
  return phi_.h_value(0) + Rational(2 * static_cast<long>(g.gp.size())) -
         Rational(2 * static_cast<long>(g.gm.size()));
}

int Module::true_height(const GammaTriple& g) const {
  if (!reduced()) throw PreconditionError("true height is defined for reduced modules (n1 = -1) only");
  return static_cast<int>(static_cast<long>(length(g)) * phi_.n2 - height(g));
}

long Module::cap_height(const GammaTriple& g) const {
  return static_cast<long>(length(g)) * mode_cap() - height(g);
}

bool Module::report_less(const GammaTriple& a, const GammaTriple& b) const {
  return std::forward_as_tuple(cap_height(a), length(a), a.gm, a.g0, a.gp) <
         std::forward_as_tuple(cap_height(b), length(b), b.gm, b.g0, b.gp);
}

std::vector<std::pair<GammaTriple, Rational>> Module::ordered_terms(const ModuleVector& v) const {
  std::vector<std::pair<GammaTriple, Rational>> out(v.begin(), v.end());
  std::sort(out.begin(), out.end(), [this](const auto& x, const auto& y) { return report_less(x.first, y.first); });
  return out;
}

std::size_t Module::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = GammaTripleHash{}(k.gamma);
  h ^= (static_cast<std::size_t>(k.g.kind) * 1000003u + static_cast<std::size_t>(k.g.mode + (1 << 20))) +
       0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t Module::cache_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

namespace {

int block_of(GenKind k) {
  switch (k) {
    case GenKind::E: return 0;
    case GenKind::H: return 1;
    default: return 2;
  }
}

GammaTuple& block_ref(GammaTriple& g, GenKind k) {
  switch (k) {
    case GenKind::E: return g.gp;
    case GenKind::H: return g.g0;
    default: return g.gm;
  }
}

// Leftmost letter of X(γ) and the index of the remaining word.
std::pair<Generator, GammaTriple> peel(const GammaTriple& g) {
  GammaTriple rest = g;
  if (!g.gp.empty()) {
    rest.gp.erase(rest.gp.begin());
    return {Generator::e(g.gp.front()), rest};
  }
  if (!g.g0.empty()) {
    rest.g0.erase(rest.g0.begin());
    return {Generator::h(g.g0.front()), rest};
  }
  rest.gm.erase(rest.gm.begin());
  return {Generator::f(g.gm.front()), rest};
}

int first_block(const GammaTriple& g) {
  if (!g.gp.empty()) return 0;
  if (!g.g0.empty()) return 1;
  return 2;
}

}  // namespace

const ModuleVector& Module::act_monomial(const Generator& g, const GammaTriple& gamma) const {
  Key key{g, gamma};
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  ModuleVector value = compute(g, gamma);
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(std::move(key), std::move(value)).first->second;
}

ModuleVector Module::compute(const Generator& g, const GammaTriple& gamma) const {
  if (g.kind == GenKind::D) throw PreconditionError("d does not act on the induced module");
  if (g.kind == GenKind::K) return monomial(gamma, phi_.kappa);

  const bool generator_of_module = is_module_generator(g);
  if (gamma.empty()) {
    if (generator_of_module) {
      GammaTriple out;
      block_ref(out, g.kind).push_back(g.mode);
      return monomial(out);
    }
    return monomial(gamma, *hom_value(phi_, g));
  }

  if (generator_of_module && block_of(g.kind) <= first_block(gamma)) {
    GammaTriple out = gamma;
    auto& block = block_ref(out, g.kind);
    block.insert(std::upper_bound(block.begin(), block.end(), g.mode), g.mode);
    return monomial(out);
  }

  // x g1 rest = g1 (x rest) + [x, g1] rest
  auto [head, rest] = peel(gamma);
  ModuleVector out = act(head, act_monomial(g, rest));
  out += act_combo(bracket(g, head), monomial(rest));
  return out;
}

ModuleVector Module::act(const Generator& g, const ModuleVector& v) const {
  if (g.kind == GenKind::D) throw PreconditionError("d does not act on the induced module");
  if (g.kind == GenKind::K) return v * phi_.kappa;
  ModuleVector out;
  for (const auto& [gamma, c] : v) out.add_scaled(act_monomial(g, gamma), c);
  return out;
}

int Module::annihilation_bound(const ModuleVector& v) const {
  long worst = 0;
  for (const auto& [gamma, c] : v) worst = std::max(worst, cap_height(gamma));
  return static_cast<int>(mode_cap() + 2 + worst);
}

}  // namespace affinelab
