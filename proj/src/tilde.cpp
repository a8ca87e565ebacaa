#include "affinelab/tilde.hpp"

#include "affinelab/quotient.hpp"

#include <algorithm>

namespace affinelab {

std::string to_string(TildeVariant v) {
  switch (v) {
    case TildeVariant::FREE_D: return "FREE_D";
    case TildeVariant::LAMBDA_QUOTIENT: return "LAMBDA_QUOTIENT";
    case TildeVariant::CRITICAL_INDUCED: return "CRITICAL_INDUCED";
  }
  return "?";
}

TildeVector embed(const ModuleVector& w, int d_exp) {
  TildeVector out;
  for (const auto& [g, c] : w) out.add(TildeKey{d_exp, g}, c);
  return out;
}

ModuleVector component(const TildeVector& v, int d_exp) {
  ModuleVector out;
  for (const auto& [k, c] : v)
    if (k.d == d_exp) out.add(k.gamma, c);
  return out;
}

std::string to_string(const TildeVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : v) {
    if (!s.empty()) s += " + ";
    s += to_display_string(c) + "*d^" + std::to_string(k.d) + "X" + to_string(k.gamma);
  }
  return s;
}

TildeModule::TildeModule(const Representation& base, const Module& shape, TildeVariant variant,
                         std::optional<Rational> lambda, Truncation t)
    : base_(base), shape_(shape), variant_(variant), lambda_(canonical(lambda.value_or(0))), trunc_(t) {
  const bool is_quotient = dynamic_cast<const Quotient*>(&base) != nullptr;
  switch (variant) {
    case TildeVariant::LAMBDA_QUOTIENT:
      if (base.level() == -2) throw PreconditionError("LAMBDA_QUOTIENT needs kappa != -2");
      if (!lambda) throw PreconditionError("LAMBDA_QUOTIENT needs lambda");
      if (is_quotient) throw PreconditionError("LAMBDA_QUOTIENT is built on the induced module");
      break;
    case TildeVariant::CRITICAL_INDUCED:
      if (!is_quotient) throw PreconditionError("CRITICAL_INDUCED is built on the critical quotient");
      break;
    case TildeVariant::FREE_D:
      if (is_quotient) throw PreconditionError("FREE_D is built on the induced module");
      break;
  }
}

int TildeModule::casimir_range(const ModuleVector& w) const {
  return base_.annihilation_bound(w) + trunc_.widen;
}

ModuleVector TildeModule::omega_rest(const ModuleVector& w) const {
  ModuleVector out;
  const ModuleVector h0w = base_.act(Generator::h(0), w);
  out.add_scaled(base_.act(Generator::h(0), h0w), Rational(1, 2));
  out += h0w;
  out.add_scaled(base_.act(Generator::f(0), base_.act(Generator::e(0), w)), 2);
  const int r = casimir_range(w);
  for (int n = 1; n <= r; ++n) {
    out.add_scaled(base_.act(Generator::e(-n), base_.act(Generator::f(n), w)), 2);
    out.add_scaled(base_.act(Generator::f(-n), base_.act(Generator::e(n), w)), 2);
    out += base_.act(Generator::h(-n), base_.act(Generator::h(n), w));
  }
  return out;
}

TildeVector TildeModule::act(const Generator& g, const TildeVector& v) const {
  if (g.kind == GenKind::K) return v * level();
  if (variant_ == TildeVariant::LAMBDA_QUOTIENT) {
    const ModuleVector w = component(v, 0);
    if (g.kind == GenKind::D) {
      ModuleVector out = w * lambda_;
      out -= omega_rest(w);
      return embed(out * (1 / (2 * (level() + 2))));
    }
    return embed(base_.act(g, w));
  }
  TildeVector out;
  if (g.kind == GenKind::D) {
    for (const auto& [k, c] : v) out.add(TildeKey{k.d + 1, k.gamma}, c);
    return out;
  }
  // x(n) d^k = (d - n)^k x(n)
  std::map<int, ModuleVector> by_exp;
  for (const auto& [k, c] : v) by_exp[k.d].add(k.gamma, c);
  for (const auto& [k, w] : by_exp) {
    const ModuleVector xw = base_.act(g, w);
    if (xw.empty()) continue;
    Rational binom = 1;
    Rational power = 1;  // (-n)^(k-j), built from j = k downward
    for (int j = k; j >= 0; --j) {
      for (const auto& [gamma, c] : xw) out.add(TildeKey{j, gamma}, c * binom * power);
      binom = binom * j / (k - j + 1);
      power *= -g.mode;
    }
  }
  return out;
}

TildeVector TildeModule::act_word(const std::vector<Generator>& word, const TildeVector& v) const {
  TildeVector out = v;
  for (auto it = word.rbegin(); it != word.rend() && !out.empty(); ++it) out = act(*it, out);
  return out;
}

TildeVector TildeModule::apply_casimir(const TildeVector& v) const {
  if (variant_ == TildeVariant::LAMBDA_QUOTIENT) {
    throw PreconditionError("apply_casimir is for FREE_D and CRITICAL_INDUCED; Omega is lambda on the quotient");
  }
  int r = 0;
  std::map<int, ModuleVector> by_exp;
  for (const auto& [k, c] : v) by_exp[k.d].add(k.gamma, c);
  for (const auto& [k, w] : by_exp) r = std::max(r, casimir_range(w));

  using G = Generator;
  TildeVector out;
  out.add_scaled(act_word({G::d(), G::K()}, v), 2);
  out.add_scaled(act(G::d(), v), 4);
  out.add_scaled(act_word({G::h(0), G::h(0)}, v), Rational(1, 2));
  out += act(G::h(0), v);
  out.add_scaled(act_word({G::f(0), G::e(0)}, v), 2);
  for (int n = 1; n <= r; ++n) {
    out.add_scaled(act_word({G::e(-n), G::f(n)}, v), 2);
    out.add_scaled(act_word({G::f(-n), G::e(n)}, v), 2);
    out += act_word({G::h(-n), G::h(n)}, v);
  }
  return out;
}

TildeSingularReport tilde_singular_space(const TildeModule& tm, const TruncationWindow& window, int d_max,
                                         Truncation t) {
  const Module& shape = tm.shape();
  const bool h_free = tm.variant() == TildeVariant::CRITICAL_INDUCED;
  const int top_exp = tm.variant() == TildeVariant::LAMBDA_QUOTIENT ? 0 : d_max;
  const auto gammas = enumerate_basis(shape, window, !h_free);

  TildeSingularReport report;
  report.window = window;
  report.cutoff = constraint_cutoff(shape.phi(), window, t);
  report.widen = t.widen;

  std::map<Rational, std::vector<TildeKey>> classes;
  for (int k = 0; k <= top_exp; ++k)
    for (const auto& g : gammas) classes[shape.weight_of(g)].push_back(TildeKey{k, g});
  report.basis_size = static_cast<int>(gammas.size()) * (top_exp + 1);

  std::vector<std::function<TildeVector(const TildeKey&)>> ops;
  for (const auto& c : singular_conditions(shape.phi(), report.cutoff)) {
    ops.push_back([&tm, c](const TildeKey& key) {
      TildeVector v = TildeVector::single(key);
      TildeVector img = tm.act(c.g, v);
      img.add_scaled(v, -c.shift);
      return img;
    });
  }

  bool unit_in_window = false;
  for (const auto& [weight, keys] : classes) {
    auto kernel = solve_kernel(keys, ops);
    report.singular_dimension_by_weight[weight] = static_cast<int>(kernel.size());
    for (auto& w : kernel) report.representatives.push_back(std::move(w));
    if (std::find(keys.begin(), keys.end(), TildeKey{}) != keys.end()) unit_in_window = true;
  }
  const TildeVector unit = TildeVector::single(TildeKey{});
  const std::size_t trivial = unit_in_window ? 1 : 0;
  bool only = report.representatives.size() == trivial;
  if (only && trivial == 1) only = report.representatives.front() == unit;
  report.verdict = only ? Verdict::ONLY_TRIVIAL : Verdict::EXTRA_SINGULAR_FOUND;
  return report;
}

}  // namespace affinelab
