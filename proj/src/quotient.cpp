#include "affinelab/quotient.hpp"

#include "affinelab/sugawara.hpp"

#include <algorithm>

namespace affinelab {

namespace {
constexpr int kMaxDepth = 4096;
}

void validate_quotient(const CriticalQuotientSpec& spec) {
  if (auto bad = validate_hom(spec.phi)) throw PreconditionError("invalid Whittaker datum: " + bad->reason);
  if (spec.phi.n1 != -1 || spec.phi.n2 < 1) throw PreconditionError("critical quotient needs n1 = -1, n2 >= 1");
  if (spec.phi.kappa != -2) throw PreconditionError("critical quotient needs kappa = -2");
  if (is_zero(spec.phi.h_value(spec.phi.n2))) throw PreconditionError("critical quotient needs phi(h(N)) != 0");
  for (const auto& [i, v] : spec.theta) {
    if (i < 1) throw PreconditionError("theta indices start at 1, got " + std::to_string(i));
  }
}

Quotient::Quotient(const Module& base, CriticalQuotientSpec spec, Truncation t)
    : base_(base), spec_(std::move(spec)), trunc_(t) {
  spec_.phi.kappa.canonicalize();
  for (auto& v : spec_.phi.h_values) v.canonicalize();
  for (auto& [i, v] : spec_.theta) v.canonicalize();
  validate_quotient(spec_);
  if (!(base_.phi() == spec_.phi)) throw PreconditionError("quotient datum differs from the base module");
}

Rational Quotient::theta(int i) const {
  auto it = spec_.theta.find(i);
  return it == spec_.theta.end() ? Rational(0) : it->second;
}

int Quotient::largest_theta_index() const {
  std::lock_guard lock(mutex_);
  return largest_theta_;
}

// In M̄: τ(N+m)ū = 4θ_{-m}ū and τ(N+m)u = 2φ(h(N)) h(m)u + R, so
// h(m)ū = (4θ_{-m}ū - R)/(2φ(h(N))).
const ModuleVector& Quotient::substitute(int m) const {
  std::lock_guard lock(mutex_);
  auto it = subs_.find(m);
  if (it != subs_.end()) return it->second;
  const int n = spec_.phi.n2;
  const Rational top = spec_.phi.h_value(n);
  ModuleVector rest = apply_T(base_, n + m, unit_vector(), trunc_) * Rational(4);
  rest.add(GammaTriple{{}, {m}, {}}, -2 * top);
  ModuleVector sub = unit_vector() * (4 * theta(-m));
  sub -= rest;
  sub *= 1 / (2 * top);
  largest_theta_ = std::max(largest_theta_, -m);
  return subs_.emplace(m, std::move(sub)).first->second;
}

const QuotientVector& Quotient::reduce_monomial(const GammaTriple& g, int depth) const {
  if (depth > kMaxDepth) throw std::runtime_error("quotient reduction did not terminate");
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(g);
    if (it != memo_.end()) return it->second;
  }
  QuotientVector value;
  if (g.g0.empty()) {
    value = monomial(g);
  } else {
    // X(γ)u = W F h(m) u - W C with m the last h-mode, W = e(γ+)h(γ0 \ m),
    // F = f(γ-) and C = F h(m)u - X(∅,(m),γ-)u, which is h-free.
    const int m = g.g0.back();
    std::vector<Generator> w;
    for (int a : g.gp) w.push_back(Generator::e(a));
    for (std::size_t k = 0; k + 1 < g.g0.size(); ++k) w.push_back(Generator::h(g.g0[k]));
    std::vector<Generator> f;
    for (int a : g.gm) f.push_back(Generator::f(a));

    ModuleVector c = base_.act_word(f, monomial(GammaTriple{{}, {m}, {}}));
    c.add(GammaTriple{{}, {m}, g.gm}, -1);
    std::vector<Generator> wf = w;
    wf.insert(wf.end(), f.begin(), f.end());
    ModuleVector lifted = base_.act_word(wf, substitute(m));
    lifted -= base_.act_word(w, c);
    value = reduce_vector(lifted, depth + 1);
  }
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(g, std::move(value)).first->second;
}

QuotientVector Quotient::reduce_vector(const ModuleVector& v, int depth) const {
  QuotientVector out;
  for (const auto& [g, c] : v) out.add_scaled(reduce_monomial(g, depth), c);
  return out;
}

QuotientVector Quotient::reduce(const ModuleVector& v) const { return reduce_vector(v, 0); }

ModuleVector Quotient::act(const Generator& g, const ModuleVector& v) const {
  if (g.kind == GenKind::D) throw PreconditionError("d does not act on the quotient");
  return reduce(base_.act(g, v));
}

SingularReport quotient_singular_space(const Quotient& q, const TruncationWindow& window, Truncation t) {
  const auto basis = enumerate_basis(q.base(), window, false);
  return solve_singular(q, q.base(), basis, window, constraint_cutoff(q.spec().phi, window, t), t.widen);
}

}  // namespace affinelab
