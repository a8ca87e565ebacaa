#include "affinelab/singular.hpp"

#include <algorithm>

namespace affinelab {

std::string to_string(Verdict v) {
  return v == Verdict::ONLY_TRIVIAL ? "ONLY_TRIVIAL" : "EXTRA_SINGULAR_FOUND";
}

std::string to_string(Prediction p) {
  return p == Prediction::PREDICTED_IRREDUCIBLE ? "PREDICTED_IRREDUCIBLE" : "PREDICTED_REDUCIBLE";
}

std::string to_string(Consistency c) {
  switch (c) {
    case Consistency::CONSISTENT: return "CONSISTENT";
    case Consistency::INCONSISTENT: return "INCONSISTENT";
    case Consistency::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "?";
}

std::vector<SingularCondition> singular_conditions(const WhittakerDatum& phi, int cutoff) {
  std::vector<SingularCondition> out;
  for (int j = 0; j <= cutoff; ++j) out.push_back({Generator::e(phi.n1 + 1 + j), 0});
  for (int i = 1; i <= cutoff; ++i) out.push_back({Generator::f(phi.n2 + i), 0});
  for (int i = 1; i <= cutoff; ++i) out.push_back({Generator::h(i), phi.h_value(i)});
  return out;
}

int constraint_cutoff(const WhittakerDatum& phi, const TruncationWindow& window, Truncation t) {
  return window.h_max + phi.n2 + 2 + t.widen;
}

bool satisfies_conditions(const Representation& rep, const WhittakerDatum& phi, const ModuleVector& w, int cutoff) {
  for (const auto& c : singular_conditions(phi, cutoff)) {
    ModuleVector img = rep.act(c.g, w);
    img.add_scaled(w, -c.shift);
    if (!img.empty()) return false;
  }
  return true;
}

namespace {

void require_reduced(const Module& m) {
  if (!m.reduced() || m.phi().n2 < 1) {
    throw PreconditionError("singular scans need a reduced module with n1 = -1 and n2 >= 1");
  }
}

// Weakly increasing tuples with entries in [lo, cap], entry cost N - m.
void tuples(int lo, int cap, int n, int budget, int slots, GammaTuple& cur,
            const std::function<void(const GammaTuple&, int, int)>& emit) {
  emit(cur, budget, slots);
  if (slots == 0) return;
  const int start = cur.empty() ? lo : cur.back();
  for (int m = start; m <= cap; ++m) {
    const int cost = n - m;
    if (cost > budget) continue;
    cur.push_back(m);
    tuples(lo, cap, n, budget - cost, slots - 1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<GammaTriple> enumerate_basis(const Module& m, const TruncationWindow& window, bool include_h) {
  require_reduced(m);
  const int n = m.phi().n2;
  const int lo = n - window.h_max;
  std::vector<GammaTriple> out;
  GammaTuple gp, g0, gm;
  tuples(lo, -1, n, window.h_max, window.l_max, gp, [&](const GammaTuple& a, int b1, int s1) {
    auto with_f = [&](const GammaTuple& h, int b2, int s2) {
      tuples(lo, n, n, b2, s2, gm, [&](const GammaTuple& f, int, int) {
        GammaTriple g{a, h, f};
        if (!window.weight || m.weight_of(g) == *window.weight) out.push_back(std::move(g));
      });
    };
    if (include_h) {
      tuples(lo, -1, n, b1, s1, g0, with_f);
    } else {
      with_f(GammaTuple{}, b1, s1);
    }
  });
  std::sort(out.begin(), out.end(), [&m](const GammaTriple& a, const GammaTriple& b) { return m.report_less(a, b); });
  return out;
}

ConstraintSystem constraint_rows(const Module& m, const TruncationWindow& window, Truncation t) {
  ConstraintSystem sys;
  sys.basis = enumerate_basis(m, window);
  sys.cutoff = constraint_cutoff(m.phi(), window, t);
  sys.conditions = singular_conditions(m.phi(), sys.cutoff);
  for (std::size_t b = 0; b < sys.basis.size(); ++b) {
    const ModuleVector v = monomial(sys.basis[b]);
    for (std::size_t c = 0; c < sys.conditions.size(); ++c) {
      ModuleVector img = m.act(sys.conditions[c].g, v);
      img.add_scaled(v, -sys.conditions[c].shift);
      sys.rows.push_back({c, b, std::move(img)});
    }
  }
  return sys;
}

SingularReport solve_singular(const Representation& rep, const Module& shape, const std::vector<GammaTriple>& basis,
                              const TruncationWindow& window, int cutoff, int widen) {
  SingularReport report;
  report.window = window;
  report.cutoff = cutoff;
  report.widen = widen;
  report.basis_size = static_cast<int>(basis.size());

  std::map<Rational, std::vector<GammaTriple>> classes;
  for (const auto& g : basis) classes[shape.weight_of(g)].push_back(g);

  std::vector<std::function<ModuleVector(const GammaTriple&)>> ops;
  for (const auto& c : singular_conditions(shape.phi(), cutoff)) {
    ops.push_back([&rep, c](const GammaTriple& g) {
      ModuleVector v = monomial(g);
      ModuleVector img = rep.act(c.g, v);
      img.add_scaled(v, -c.shift);
      return img;
    });
  }

  bool unit_in_window = false;
  for (const auto& [weight, keys] : classes) {
    auto kernel = solve_kernel(keys, ops);
    report.singular_dimension_by_weight[weight] = static_cast<int>(kernel.size());
    for (auto& w : kernel) report.representatives.push_back(std::move(w));
    if (std::find(keys.begin(), keys.end(), GammaTriple{}) != keys.end()) unit_in_window = true;
  }

  auto leading = [&shape](const ModuleVector& v) {
    const GammaTriple* best = nullptr;
    for (const auto& [g, c] : v)
      if (!best || shape.report_less(*best, g)) best = &g;
    return *best;
  };
  std::sort(report.representatives.begin(), report.representatives.end(),
            [&](const ModuleVector& a, const ModuleVector& b) { return shape.report_less(leading(a), leading(b)); });

  const std::size_t trivial = unit_in_window ? 1 : 0;
  bool only_trivial = report.representatives.size() == trivial;
  if (only_trivial && trivial == 1) only_trivial = report.representatives.front() == unit_vector();
  report.verdict = only_trivial ? Verdict::ONLY_TRIVIAL : Verdict::EXTRA_SINGULAR_FOUND;
  return report;
}

SingularReport singular_space(const Module& m, const TruncationWindow& window, Truncation t) {
  const auto basis = enumerate_basis(m, window);
  return solve_singular(m, m, basis, window, constraint_cutoff(m.phi(), window, t), t.widen);
}

CriterionReport criterion_report(const WhittakerDatum& phi, const TruncationWindow& window, Truncation t) {
  if (auto bad = validate_hom(phi)) throw PreconditionError("invalid Whittaker datum: " + bad->reason);
  CriterionReport out;
  out.twist = phi.n1 + 1;
  out.reduced = twist_hom(phi, out.twist);
  const int n = out.reduced.n2;
  const Rational top = out.reduced.h_value(n);
  const bool critical = phi.kappa == -2;

  if (is_zero(top)) {
    out.prediction = Prediction::PREDICTED_REDUCIBLE;
    out.reason = "phi(h(N1+N2+1)) = 0";
  } else if (critical) {
    out.prediction = Prediction::PREDICTED_REDUCIBLE;
    out.reason = "critical level kappa = -2";
  } else {
    out.prediction = Prediction::PREDICTED_IRREDUCIBLE;
    out.reason = "phi(h(N1+N2+1)) != 0 and kappa != -2";
  }

  Module reduced(out.reduced);
  out.scan = singular_space(reduced, window, t);

  if (out.prediction == Prediction::PREDICTED_IRREDUCIBLE) {
    const bool ok = out.scan.verdict == Verdict::ONLY_TRIVIAL;
    out.consistency = ok ? Consistency::CONSISTENT : Consistency::INCONSISTENT;
    out.detail = ok ? "no singular vectors outside Cu in the window" : "extra singular vectors found";
    return out;
  }
  if (is_zero(top)) {
    // f(N)u is singular; it lies in the window as soon as l_max >= 1.
    const ModuleVector witness = monomial(GammaTriple{{}, {}, {n}});
    const bool found =
        std::find(out.scan.representatives.begin(), out.scan.representatives.end(), witness) !=
        out.scan.representatives.end();
    if (window.l_max < 1 || (window.weight && *window.weight != reduced.weight_of(GammaTriple{{}, {}, {n}}))) {
      out.consistency = found ? Consistency::CONSISTENT : Consistency::INCONCLUSIVE;
      out.detail = "window cannot contain f(N)u";
    } else {
      out.consistency = found ? Consistency::CONSISTENT : Consistency::INCONSISTENT;
      out.detail = found ? "f(N)u is singular" : "f(N)u not found among singular vectors";
    }
    return out;
  }
  // Critical level: T(N-1)u has true height N+1 and length 2.
  const bool found = out.scan.verdict == Verdict::EXTRA_SINGULAR_FOUND;
  const bool fits = window.h_max >= n + 1 && window.l_max >= 2 && (!window.weight || *window.weight == out.reduced.h_value(0));
  if (found) {
    out.consistency = Consistency::CONSISTENT;
    out.detail = "singular vectors beyond Cu found";
  } else {
    out.consistency = fits ? Consistency::INCONSISTENT : Consistency::INCONCLUSIVE;
    out.detail = fits ? "T(N-1)u should be singular but nothing beyond Cu was found" : "window cannot contain T(N-1)u";
  }
  return out;
}

}  // namespace affinelab
