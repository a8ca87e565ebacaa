#include "affinelab/algebra.hpp"

namespace affinelab {

std::string to_string(const Generator& g) {
  switch (g.kind) {
    case GenKind::E: return "e(" + std::to_string(g.mode) + ")";
    case GenKind::F: return "f(" + std::to_string(g.mode) + ")";
    case GenKind::H: return "h(" + std::to_string(g.mode) + ")";
    case GenKind::K: return "K";
    case GenKind::D: return "d";
  }
  return "?";
}

Rational WhittakerDatum::h_value(int k) const {
  if (k < 0 || k >= static_cast<int>(h_values.size())) return 0;
  return h_values[static_cast<std::size_t>(k)];
}

WhittakerDatum make_datum(int n1, int n2, const Rational& kappa, std::vector<Rational> values) {
  if (n1 + n2 < 0) {
    throw PreconditionError("n1 + n2 must be nonnegative, got " + std::to_string(n1 + n2));
  }
  const std::size_t want = static_cast<std::size_t>(n1 + n2 + 2);
  for (std::size_t k = want; k < values.size(); ++k) {
    if (!is_zero(values[k])) {
      throw PreconditionError("phi(h(" + std::to_string(k) + ")) must vanish for k > n1+n2+1 = " +
                              std::to_string(n1 + n2 + 1));
    }
  }
  values.resize(want, Rational(0));
  return WhittakerDatum{n1, n2, kappa, std::move(values)};
}

std::optional<HomViolation> validate_hom(const WhittakerDatum& phi) {
  if (phi.n1 + phi.n2 < 0) {
    return HomViolation{"n1 + n2 < 0", std::nullopt};
  }
  const auto want = static_cast<std::size_t>(phi.n1 + phi.n2 + 2);
  if (phi.h_values.size() < want) {
    return HomViolation{"h_values needs exactly " + std::to_string(want) + " entries, missing index " +
                            std::to_string(phi.h_values.size()),
                        static_cast<int>(phi.h_values.size())};
  }
  if (phi.h_values.size() > want) {
    return HomViolation{"h_values needs exactly " + std::to_string(want) + " entries, extra index " +
                            std::to_string(want),
                        static_cast<int>(want)};
  }
  return std::nullopt;
}

namespace {

// Invariant form on sl2: (e|f) = (f|e) = 1, (h|h) = 2.
int form(GenKind a, GenKind b) {
  if ((a == GenKind::E && b == GenKind::F) || (a == GenKind::F && b == GenKind::E)) return 1;
  if (a == GenKind::H && b == GenKind::H) return 2;
  return 0;
}

}  // namespace

GeneratorCombo bracket(const Generator& x, const Generator& y) {
  GeneratorCombo out;
  if (x.kind == GenKind::K || y.kind == GenKind::K) return out;
  if (x.kind == GenKind::D && y.kind == GenKind::D) return out;
  if (x.kind == GenKind::D) {
    out.add(y, y.mode);
    return out;
  }
  if (y.kind == GenKind::D) {
    out.add(x, -x.mode);
    return out;
  }
  const int m = x.mode + y.mode;
  switch (x.kind) {
    case GenKind::E:
      if (y.kind == GenKind::F) out.add(Generator::h(m), 1);
      if (y.kind == GenKind::H) out.add(Generator::e(m), -2);
      break;
    case GenKind::F:
      if (y.kind == GenKind::E) out.add(Generator::h(m), -1);
      if (y.kind == GenKind::H) out.add(Generator::f(m), 2);
      break;
    case GenKind::H:
      if (y.kind == GenKind::E) out.add(Generator::e(m), 2);
      if (y.kind == GenKind::F) out.add(Generator::f(m), -2);
      break;
    default:
      break;
  }
  if (m == 0) out.add(Generator::K(), form(x.kind, y.kind) * x.mode);
  return out;
}

GeneratorCombo bracket(const GeneratorCombo& x, const GeneratorCombo& y) {
  GeneratorCombo out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add_scaled(bracket(a, b), ca * cb);
  return out;
}

bool in_subalgebra(const WhittakerDatum& phi, const Generator& g) {
  switch (g.kind) {
    case GenKind::K: return true;
    case GenKind::H: return g.mode >= 0;
    case GenKind::E: return g.mode > phi.n1;
    case GenKind::F: return g.mode > phi.n2;
    case GenKind::D: return false;
  }
  return false;
}

std::optional<Rational> hom_value(const WhittakerDatum& phi, const Generator& g) {
  if (!in_subalgebra(phi, g)) return std::nullopt;
  if (g.kind == GenKind::K) return phi.kappa;
  if (g.kind == GenKind::H) return phi.h_value(g.mode);
  return Rational(0);
}

GeneratorCombo twist_generator(const SpectralFlow& sigma, const Generator& g) {
  GeneratorCombo out;
  switch (g.kind) {
    case GenKind::E: out.add(Generator::e(g.mode + sigma.k), 1); break;
    case GenKind::F: out.add(Generator::f(g.mode - sigma.k), 1); break;
    case GenKind::H:
      out.add(g, 1);
      if (g.mode == 0) out.add(Generator::K(), sigma.k);
      break;
    case GenKind::K: out.add(g, 1); break;
    case GenKind::D: throw PreconditionError("spectral flow is not defined on d");
  }
  return out;
}

GeneratorCombo twist_combo(const SpectralFlow& sigma, const GeneratorCombo& x) {
  GeneratorCombo out;
  for (const auto& [g, c] : x) out.add_scaled(twist_generator(sigma, g), c);
  return out;
}

WhittakerDatum twist_hom(const WhittakerDatum& phi, int k) {
  WhittakerDatum out = phi;
  out.n1 = phi.n1 - k;
  out.n2 = phi.n2 + k;
  if (!out.h_values.empty()) out.h_values[0] += Rational(k) * phi.kappa;
  return out;
}

}  // namespace affinelab
