#include "affinelab/sugawara.hpp"

#include <cstdlib>
#include <map>

namespace affinelab {

std::vector<Generator> normal_ordered(const Generator& x, const Generator& y) {
  if (x.mode < 0) return {x, y};
  return {y, x};
}

int quadratic_range(int bound, int n, Truncation t) { return bound + std::abs(n) + 1 + t.widen; }

namespace {

// The three normal-ordered families of Q(n) at index i, with their weights
// inside the bracket (before the overall 1/4).
template <class Fn>
void for_each_word(int n, int i, Fn&& fn) {
  fn(normal_ordered(Generator::e(-i), Generator::f(n + i)), Rational(2));
  fn(normal_ordered(Generator::f(-i), Generator::e(n + i)), Rational(2));
  fn(normal_ordered(Generator::h(-i), Generator::h(n + i)), Rational(1));
}

}  // namespace

ModuleVector apply_quadratic(const Representation& rep, int n, const ModuleVector& v, Truncation t) {
  ModuleVector out;
  for (const auto& [gamma, c] : v) {
    const ModuleVector b = monomial(gamma);
    const int r = quadratic_range(rep.annihilation_bound(b), n, t);
    ModuleVector acc;
    for (int i = -r; i <= r; ++i) {
      for_each_word(n, i, [&](const std::vector<Generator>& word, const Rational& w) {
        acc.add_scaled(rep.act(word[0], rep.act(word[1], b)), w);
      });
    }
    out.add_scaled(acc, c / 4);
  }
  return out;
}

ModuleVector apply_T(const Representation& rep, int n, const ModuleVector& v, Truncation t) {
  if (rep.level() != -2) throw PreconditionError("T(n) is defined at the critical level kappa = -2 only");
  return apply_quadratic(rep, n, v, t);
}

ModuleVector apply_L(const Representation& rep, int n, const ModuleVector& v, Truncation t) {
  if (rep.level() == -2) throw PreconditionError("L(n) needs kappa != -2");
  return apply_quadratic(rep, n, v, t) * (1 / (rep.level() + 2));
}

ModuleVector apply(const Representation& rep, const QuadraticOperator& op, const ModuleVector& v, Truncation t) {
  switch (op.normalization) {
    case Normalization::CRITICAL_T: return apply_T(rep, op.n, v, t);
    case Normalization::VIRASORO_L: return apply_L(rep, op.n, v, t);
    default: return apply_quadratic(rep, op.n, v, t);
  }
}

TauExpression build_tau(const Module& m, int n) {
  const WhittakerDatum& phi = m.phi();
  if (!m.reduced()) throw PreconditionError("build_tau needs a reduced module (n1 = -1)");
  if (phi.kappa != -2) throw PreconditionError("build_tau needs kappa = -2");
  if (n >= phi.n2) throw PreconditionError("build_tau needs n < N");

  const int cap = phi.n2;
  auto kills_unit = [cap](const Generator& g) {
    switch (g.kind) {
      case GenKind::E: return g.mode >= 0;
      case GenKind::F: return g.mode > cap;
      case GenKind::H: return g.mode > cap;
      default: return false;
    }
  };

  // Past this range the rightmost letter always has mode > N.
  const int r = cap + std::abs(n) + 1;
  std::map<std::vector<Generator>, Rational> merged;
  std::vector<std::vector<Generator>> order;
  for (int i = -r; i <= r; ++i) {
    for_each_word(n, i, [&](const std::vector<Generator>& word, const Rational& w) {
      if (kills_unit(word.back())) return;
      auto [it, inserted] = merged.try_emplace(word, Rational(0));
      if (inserted) order.push_back(word);
      it->second += w;  // 4 Q(n) carries the bracket weights unscaled
    });
  }
  TauExpression tau{n, {}};
  for (const auto& word : order) {
    const Rational& c = merged[word];
    if (!is_zero(c)) tau.terms.emplace_back(word, c);
  }
  return tau;
}

ModuleVector evaluate(const Representation& rep, const TauExpression& tau, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [word, c] : tau.terms) out.add_scaled(rep.act_word(word, v), c);
  return out;
}

}  // namespace affinelab
