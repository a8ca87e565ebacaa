// Acceptance run: criteria 1-9 at their stated parameters, then criterion 10
// reruns 1-9 with every truncation margin widened by 10 and compares results.
#include "affinelab/checks.hpp"
#include "affinelab/quotient.hpp"
#include "affinelab/singular.hpp"
#include "affinelab/sugawara.hpp"
#include "affinelab/takiff.hpp"
#include "affinelab/tilde.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace affinelab;
using G = Generator;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::ostringstream fingerprint;  // everything computed, for criterion 10

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  void check(const CheckResult& r) {
    fingerprint << r.name << ':' << r.samples << '/' << r.failures << ';';
    require(r.passed(), r.name + ": " + r.first_failure.value_or(""));
  }
  void record(const SingularReport& r) {
    fingerprint << to_string(r.verdict) << '[';
    for (const auto& v : r.representatives) fingerprint << to_string(v) << '|';
    fingerprint << ']';
  }
};

std::vector<G> word_of(const GammaTriple& g) {
  std::vector<G> w;
  for (int a : g.gp) w.push_back(G::e(a));
  for (int a : g.g0) w.push_back(G::h(a));
  for (int a : g.gm) w.push_back(G::f(a));
  return w;
}

std::vector<GammaTriple> h_free(const std::vector<GammaTriple>& all) {
  std::vector<GammaTriple> out;
  for (const auto& g : all)
    if (g.g0.empty()) out.push_back(g);
  return out;
}

std::vector<DenseVector> coordinates(const std::vector<ModuleVector>& vs, const std::vector<GammaTriple>& basis,
                                     bool& inside) {
  std::vector<DenseVector> out;
  inside = true;
  for (const auto& v : vs) {
    DenseVector d(basis.size(), 0);
    for (const auto& [g, c] : v) {
      auto it = std::find(basis.begin(), basis.end(), g);
      if (it == basis.end()) {
        inside = false;
        continue;
      }
      d[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    out.push_back(std::move(d));
  }
  return out;
}

void criterion1(Outcome& o, Truncation) {
  std::uint64_t seed = 1000;
  for (const Rational& kappa : {Rational(0), Rational(1), Rational(-2), Rational(-3)}) {
    Module m(WhittakerDatum{-1, 1, kappa, {Rational(1, 2), 3}});
    o.check(module_axiom_fuzz(m, corpus(m, 8, 4), 125, 6, seed++));
  }
}

void criterion2(Outcome& o, Truncation t) {
  Module m(WhittakerDatum{-1, 2, 1, {1, 2, 0}});
  const auto r = singular_space(m, {6, 3, std::nullopt}, t);
  o.record(r);
  for (int k = 1; k <= 3; ++k) {
    const ModuleVector v = monomial(GammaTriple{{}, {}, GammaTuple(static_cast<std::size_t>(k), 2)});
    const bool found = std::find(r.representatives.begin(), r.representatives.end(), v) != r.representatives.end();
    o.require(found, "f(2)^" + std::to_string(k) + "u missing");
  }
}

void criterion3(Outcome& o, Truncation t) {
  for (const Rational& top : {Rational(1), Rational(3, 2)})
    for (const Rational& a0 : {Rational(0), Rational(1)})
      for (const Rational& kappa : {Rational(0), Rational(5), Rational(-1, 2)}) {
        Module m(WhittakerDatum{-1, 1, kappa, {a0, top}});
        const auto r = singular_space(m, {6, 4, std::nullopt}, t);
        o.record(r);
        o.require(r.verdict == Verdict::ONLY_TRIVIAL, "extra singular vector at h = [" + to_display_string(a0) + ", " +
                                                          to_display_string(top) + "], kappa = " +
                                                          to_display_string(kappa));
      }
  Module m(WhittakerDatum{-1, 2, 1, {1, 1, 2}});
  const auto r = singular_space(m, {5, 3, std::nullopt}, t);
  o.record(r);
  o.require(r.verdict == Verdict::ONLY_TRIVIAL, "extra singular vector for (-1,2)");
}

void criterion4(Outcome& o, Truncation t) {
  Module m(WhittakerDatum{-1, 1, -2, {0, 1}});
  const ModuleVector u = unit_vector();
  for (int n : {0, -1, -2}) {
    const ModuleVector four_t = apply_T(m, n, u, t) * Rational(4);
    o.fingerprint << to_string(four_t) << ';';
    o.require(evaluate(m, build_tau(m, n), u) == four_t, "tau mismatch at n = " + std::to_string(n));
  }
  for (int n : {1, 2, 3}) {
    const ModuleVector tu = apply_T(m, n, u, t);
    o.fingerprint << to_string(tu) << ';';
    o.require(tu.empty() || (tu.size() == 1 && tu.begin()->first.empty()), "T(n)u not in Cu");
  }
  Sampler rng(404);
  const auto c = corpus(m, 4, 3);
  CheckResult central{"centrality", 0, 0, std::nullopt};
  for (int s = 0; s < 100; ++s) {
    const int n = rng.uniform(-5, 5);
    const G x{static_cast<GenKind>(rng.uniform(0, 2)), rng.uniform(-5, 5)};
    const ModuleVector v = rng.vector(c);
    central.record(apply_T(m, n, m.act(x, v), t) == m.act(x, apply_T(m, n, v, t)),
                   "T(" + std::to_string(n) + ") vs " + to_string(x));
  }
  o.check(central);

  // C[T]-orbit: products T(n_1)...T(n_k)u, n_i <= 0, of true height sum(2 - n_i) <= 4.
  const TruncationWindow window{4, 4, std::nullopt};
  const auto basis = enumerate_basis(m, window);
  std::vector<ModuleVector> orbit;
  std::function<void(int, int, const ModuleVector&)> grow = [&](int max_n, int budget, const ModuleVector& v) {
    orbit.push_back(v);
    for (int n = max_n; 2 - n <= budget; --n) grow(n, budget - (2 - n), apply_T(m, n, v, t));
  };
  grow(0, window.h_max, u);
  bool inside = false;
  const auto orbit_coords = coordinates(orbit, basis, inside);
  o.require(inside, "orbit leaves the window");
  const auto r = singular_space(m, window, t);
  o.record(r);
  bool reps_inside = false;
  const auto rep_coords = coordinates(r.representatives, basis, reps_inside);
  o.fingerprint << "orbit " << orbit.size() << " rank " << rank_of(orbit_coords) << ';';
  o.require(canonical_basis(orbit_coords) == canonical_basis(rep_coords), "singular space differs from the T-orbit");
}

void criterion5(Outcome& o, Truncation t) {
  for (const Rational& kappa : {Rational(0), Rational(2)}) {
    Module m(WhittakerDatum{-1, 1, kappa, {1, 3}});
    o.check(virasoro_check(m, corpus(m, 3, 3), 100, 500, t));
  }
}

void criterion6(Outcome& o, Truncation) {
  for (int n : {0, 1, 2})
    for (const Rational& last : {Rational(0), Rational(1), Rational(-2)}) {
      TakiffSpec s{n, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, 2)), 0};
      s.psi_values.push_back(last);
      const auto r = wilson_scan(s, 3);
      o.fingerprint << r.found << r.predicted_reducible << ';';
      o.require(r.consistent, "Wilson mismatch at N = " + std::to_string(n) + ", psi_N = " + to_display_string(last));
    }
  for (int n : {1, 2})
    for (const Rational& theta : {Rational(0), Rational(-2)}) {
      TakiffSpec s{n, {}, theta};
      for (int k = 0; k <= n; ++k) s.psi_values.push_back(Rational(k + 2) / 3);
      const auto r = intertwine_check(s, 200, 600 + static_cast<std::uint64_t>(n));
      o.check(CheckResult{"intertwine", r.samples, r.failures, r.first_failure});
    }
}

void criterion7(Outcome& o, Truncation) {
  o.check(twist_check(WhittakerDatum{0, 0, 1, {2, 3}}, 100, 700));
  o.check(twist_check(WhittakerDatum{1, 0, Rational(-1, 2), {2, 3, 5}}, 100, 701));
  o.check(twist_check(WhittakerDatum{-1, 2, -2, {1, 0, 4}}, 100, 702));
}

void criterion8(Outcome& o, Truncation t) {
  const WhittakerDatum phi{-1, 1, -2, {0, 1}};
  Module m(phi);
  for (const auto& theta : {std::map<int, Rational>{{1, 0}, {2, 0}, {3, 0}}, std::map<int, Rational>{{1, 7}}}) {
    Quotient q(m, {phi, theta}, t);
    const auto r = quotient_singular_space(q, {4, 3, std::nullopt}, t);
    o.record(r);
    o.require(r.verdict == Verdict::ONLY_TRIVIAL, "extra singular vector in the quotient");
    CheckResult killed{"submodule generators", 0, 0, std::nullopt};
    const auto c = corpus(m, 3, 2);
    for (int i = 1; i <= 3; ++i) {
      const ModuleVector gen = evaluate(m, build_tau(m, 1 - i), unit_vector()) - unit_vector() * (4 * q.theta(i));
      for (const auto& g : c) {
        const ModuleVector s = m.act_word(word_of(g), gen);
        killed.record(q.reduce(s).empty(), "i = " + std::to_string(i) + ", gamma = " + to_string(g));
      }
    }
    o.check(killed);
    o.fingerprint << "theta index " << q.largest_theta_index() << ';';
  }
}

void criterion9(Outcome& o, Truncation t) {
  Module m(WhittakerDatum{-1, 1, 1, {1, 3}});
  TildeModule free_tm(m, m, TildeVariant::FREE_D, std::nullopt, t);
  o.check(casimir_centrality(free_tm, corpus(m, 2, 2), 100, 900));

  for (const Rational& kappa : {Rational(0), Rational(-2)}) {
    const Rational a0 = 1, a1 = 3;
    Module mk(WhittakerDatum{-1, 1, kappa, {a0, a1}});
    TildeModule tm(mk, mk, TildeVariant::FREE_D, std::nullopt, t);
    // ½h(0)² + h(0) + 2e(-1)f(1) + h(-1)h(1) on u, plus 2(κ+2) d⊗u.
    TildeVector expected = embed(unit_vector() * (a0 * a0 / 2 + a0));
    expected.add(TildeKey{1, GammaTriple{}}, 2 * (kappa + 2));
    expected.add(TildeKey{0, GammaTriple{{-1}, {}, {1}}}, 2);
    expected.add(TildeKey{0, GammaTriple{{}, {-1}, {}}}, a1);
    const TildeVector got = tm.apply_casimir(embed(unit_vector()));
    o.fingerprint << to_string(got) << ';';
    o.require(got == expected, "Omega(1 (x) u) at kappa = " + to_display_string(kappa) + ": " + to_string(got));
  }

  const WhittakerDatum crit{-1, 1, -2, {0, 1}};
  Module cm(crit);
  Quotient q(cm, {crit, {{1, 0}}}, t);
  TildeModule ct(q, cm, TildeVariant::CRITICAL_INDUCED, std::nullopt, t);
  const auto rc = tilde_singular_space(ct, {3, 3, std::nullopt}, 2, t);
  o.require(rc.verdict == Verdict::ONLY_TRIVIAL, "critical induced module has extra singular vectors");

  Module lm(WhittakerDatum{-1, 1, 0, {1, 3}});
  TildeModule lt(lm, lm, TildeVariant::LAMBDA_QUOTIENT, Rational(5), t);
  const auto rl = tilde_singular_space(lt, {3, 3, std::nullopt}, 0, t);
  o.require(rl.verdict == Verdict::ONLY_TRIVIAL, "lambda quotient has extra singular vectors");
  for (const auto* r : {&rc, &rl}) {
    o.fingerprint << to_string(r->verdict) << '[';
    for (const auto& v : r->representatives) o.fingerprint << to_string(v) << '|';
    o.fingerprint << ']';
  }
}

struct Criterion {
  int id;
  std::string title;
  std::function<void(Outcome&, Truncation)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "module axiom fuzz", criterion1},
      {2, "f(N)^m u singular when phi(h(N)) = 0", criterion2},
      {3, "noncritical irreducibility scans", criterion3},
      {4, "critical singular structure", criterion4},
      {5, "Virasoro relations", criterion5},
      {6, "Takiff Wilson grid and intertwining", criterion6},
      {7, "twist equivalence", criterion7},
      {8, "critical quotient", criterion8},
      {9, "extended modules and Casimir", criterion9},
  };

  bool all = true;
  std::vector<std::string> base_prints;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      c.body(o, Truncation{});
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    base_prints.push_back(o.fingerprint.str());
    std::cout << "criterion " << c.id << " (" << c.title << "): " << (o.pass ? "PASS" : "FAIL");
    if (!o.pass) std::cout << " - " << o.detail;
    std::cout << " [" << secs << " s]" << std::endl;
  }

  Outcome widened;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].body(o, Truncation{10});
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    widened.require(o.pass, "criterion " + std::to_string(criteria[i].id) + " fails when widened: " + o.detail);
    widened.require(o.fingerprint.str() == base_prints[i],
                    "criterion " + std::to_string(criteria[i].id) + " changes when widened");
  }
  all = all && widened.pass;
  std::cout << "criterion 10 (truncation soundness, widen = 10): " << (widened.pass ? "PASS" : "FAIL");
  if (!widened.pass) std::cout << " - " << widened.detail;
  std::cout << std::endl;

  return all ? 0 : 1;
}
