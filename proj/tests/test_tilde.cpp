#include "affinelab/checks.hpp"
#include "affinelab/quotient.hpp"
#include "affinelab/tilde.hpp"

#include <doctest.h>

using namespace affinelab;
using G = Generator;

namespace {

std::vector<GammaTriple> h_free(const std::vector<GammaTriple>& all) {
  std::vector<GammaTriple> out;
  for (const auto& g : all)
    if (g.g0.empty()) out.push_back(g);
  return out;
}

// Ω(1⊗u) from ½h(0)² + h(0) + 2 Σ e(-n)f(n) + Σ h(-n)h(n) with f(-n)e(n)u = 0,
// plus the 2(κ+2) d⊗u term.
TildeVector omega_on_u(const Module& m) {
  const WhittakerDatum& phi = m.phi();
  const Rational a0 = phi.h_value(0);
  TildeVector out = embed(unit_vector() * (a0 * a0 / 2 + a0));
  out.add(TildeKey{1, GammaTriple{}}, 2 * (phi.kappa + 2));
  for (int n = 1; n <= phi.n2; ++n) {
    out.add(TildeKey{0, GammaTriple{{-n}, {}, {n}}}, 2);
    out.add(TildeKey{0, GammaTriple{{}, {-n}, {}}}, phi.h_value(n));
  }
  return out;
}

}  // namespace

TEST_CASE("extended action examples") {
  Module m(WhittakerDatum{-1, 1, 1, {1, 3}});
  TildeModule tm(m, m, TildeVariant::FREE_D);
  const ModuleVector w = monomial(GammaTriple{{}, {}, {0}});
  CHECK(tm.act(G::d(), embed(unit_vector())) == embed(unit_vector(), 1));
  CHECK(tm.act(G::d(), embed(w, 2)) == embed(w, 3));
  for (int n : {-2, 0, 1}) {
    const ModuleVector xw = m.act(G::e(n), w);
    CHECK(tm.act(G::e(n), embed(w, 1)) == embed(xw, 1) - embed(xw) * Rational(n));
  }
  // d^2: C(2,j)(-n)^{2-j}.
  const ModuleVector fw = m.act(G::f(-1), w);
  CHECK(tm.act(G::f(-1), embed(w, 2)) == embed(fw, 2) + embed(fw, 1) * Rational(2) + embed(fw));
  CHECK(tm.act(G::K(), embed(w, 1)) == embed(w, 1));
  CHECK(component(embed(w, 2) + embed(unit_vector()), 2) == w);
  CHECK(component(embed(w, 2), 1).empty());
}

TEST_CASE("extended module axiom in every variant") {
  Module free_m(WhittakerDatum{-1, 1, Rational(1, 2), {1, 3}});
  TildeModule free_tm(free_m, free_m, TildeVariant::FREE_D);
  auto r1 = tilde_axiom_fuzz(free_tm, corpus(free_m, 3, 2), 120, 31);
  CHECK_MESSAGE(r1.passed(), r1.first_failure.value_or(""));

  TildeModule lam_tm(free_m, free_m, TildeVariant::LAMBDA_QUOTIENT, Rational(5));
  auto r2 = tilde_axiom_fuzz(lam_tm, corpus(free_m, 3, 2), 120, 32);
  CHECK_MESSAGE(r2.passed(), r2.first_failure.value_or(""));

  const WhittakerDatum crit{-1, 1, -2, {2, 1}};
  Module cm(crit);
  Quotient q(cm, {crit, {{1, 3}}});
  TildeModule crit_tm(q, cm, TildeVariant::CRITICAL_INDUCED);
  auto r3 = tilde_axiom_fuzz(crit_tm, h_free(corpus(cm, 3, 2)), 120, 33);
  CHECK_MESSAGE(r3.passed(), r3.first_failure.value_or(""));
}

TEST_CASE("[d, x(n)] = n x(n) in the lambda quotient") {
  Module m(WhittakerDatum{-1, 2, 0, {1, 2, 3}});
  TildeModule tm(m, m, TildeVariant::LAMBDA_QUOTIENT, Rational(5));
  for (const auto& g : corpus(m, 2, 2)) {
    const TildeVector v = embed(monomial(g));
    for (int n = -2; n <= 3; ++n) {
      const G x = G::f(n);
      const TildeVector lhs = tm.act(G::d(), tm.act(x, v)) - tm.act(x, tm.act(G::d(), v));
      CHECK(lhs == tm.act(x, v) * Rational(n));
    }
  }
}

TEST_CASE("Casimir on the generator") {
  for (const Rational& kappa : {Rational(0), Rational(-2), Rational(3, 2)}) {
    Module m(WhittakerDatum{-1, 1, kappa, {1, 3}});
    TildeModule tm(m, m, TildeVariant::FREE_D);
    CHECK(tm.apply_casimir(embed(unit_vector())) == omega_on_u(m));
  }
  Module m(WhittakerDatum{-1, 1, 0, {1, 3}});
  TildeModule tm(m, m, TildeVariant::FREE_D);
  TildeVector expected = embed(unit_vector(), 1) * Rational(4) + embed(unit_vector()) * Rational(3, 2);
  expected.add(TildeKey{0, GammaTriple{{}, {-1}, {}}}, 3);
  expected.add(TildeKey{0, GammaTriple{{-1}, {}, {1}}}, 2);
  CHECK(tm.apply_casimir(embed(unit_vector())) == expected);

  Module m2(WhittakerDatum{-1, 2, 1, {Rational(-1, 2), 2, 5}});
  TildeModule tm2(m2, m2, TildeVariant::FREE_D);
  CHECK(tm2.apply_casimir(embed(unit_vector())) == omega_on_u(m2));
}

TEST_CASE("Casimir is central") {
  Module m(WhittakerDatum{-1, 1, 1, {1, 3}});
  TildeModule tm(m, m, TildeVariant::FREE_D);
  auto r = casimir_centrality(tm, corpus(m, 2, 2), 60, 5);
  CHECK_MESSAGE(r.passed(), r.first_failure.value_or(""));

  const WhittakerDatum crit{-1, 1, -2, {0, 1}};
  Module cm(crit);
  Quotient q(cm, {crit, {}});
  TildeModule ct(q, cm, TildeVariant::CRITICAL_INDUCED);
  auto rc = casimir_centrality(ct, h_free(corpus(cm, 2, 2)), 60, 6);
  CHECK_MESSAGE(rc.passed(), rc.first_failure.value_or(""));
}

TEST_CASE("lambda quotient reconstructs Omega = lambda") {
  for (const Rational& kappa : {Rational(0), Rational(1, 3)}) {
    Module m(WhittakerDatum{-1, 1, kappa, {1, 3}});
    const Rational lambda(7);
    TildeModule tm(m, m, TildeVariant::LAMBDA_QUOTIENT, lambda);
    for (const auto& g : corpus(m, 3, 2)) {
      const ModuleVector v = monomial(g);
      ModuleVector omega = component(tm.act(G::d(), embed(v)), 0) * (2 * (kappa + 2));
      omega += tm.omega_rest(v);
      CHECK(omega == v * lambda);
    }
  }
}

TEST_CASE("widening the Casimir sum changes nothing") {
  Module m(WhittakerDatum{-1, 2, 1, {1, 0, 2}});
  TildeModule tm(m, m, TildeVariant::FREE_D);
  TildeModule wide(m, m, TildeVariant::FREE_D, std::nullopt, Truncation{10});
  for (const auto& g : corpus(m, 3, 2)) {
    const TildeVector v = embed(monomial(g), 1);
    CHECK(tm.apply_casimir(v) == wide.apply_casimir(v));
  }
}

TEST_CASE("tilde singular scans") {
  SUBCASE("critical induced") {
    const WhittakerDatum crit{-1, 1, -2, {0, 1}};
    Module cm(crit);
    Quotient q(cm, {crit, {{1, 0}}});
    TildeModule tm(q, cm, TildeVariant::CRITICAL_INDUCED);
    const auto r = tilde_singular_space(tm, {3, 3, std::nullopt}, 2);
    CHECK(r.verdict == Verdict::ONLY_TRIVIAL);
    REQUIRE(r.representatives.size() == 1);
    CHECK(r.representatives[0] == embed(unit_vector()));
  }
  SUBCASE("lambda quotient") {
    Module m(WhittakerDatum{-1, 1, 0, {1, 3}});
    TildeModule tm(m, m, TildeVariant::LAMBDA_QUOTIENT, Rational(5));
    const auto r = tilde_singular_space(tm, {3, 3, std::nullopt}, 2);
    CHECK(r.verdict == Verdict::ONLY_TRIVIAL);
    for (const auto& w : r.representatives)
      for (const auto& [k, c] : w) CHECK(k.d == 0);
  }
  SUBCASE("free d with phi(h(N)) = 0") {
    Module m(WhittakerDatum{-1, 1, 1, {1, 0}});
    TildeModule tm(m, m, TildeVariant::FREE_D);
    const auto r = tilde_singular_space(tm, {2, 2, std::nullopt}, 1);
    CHECK(r.verdict == Verdict::EXTRA_SINGULAR_FOUND);
    bool found = false;
    for (const auto& w : r.representatives) found = found || w == embed(monomial(GammaTriple{{}, {}, {1}}));
    CHECK(found);
  }
}

TEST_CASE("tilde preconditions") {
  Module critical(WhittakerDatum{-1, 1, -2, {0, 1}});
  Module generic(WhittakerDatum{-1, 1, 0, {0, 1}});
  Quotient q(critical, {critical.phi(), {}});
  CHECK_THROWS_AS(TildeModule(critical, critical, TildeVariant::LAMBDA_QUOTIENT, Rational(1)), PreconditionError);
  CHECK_THROWS_AS(TildeModule(generic, generic, TildeVariant::LAMBDA_QUOTIENT), PreconditionError);
  CHECK_THROWS_AS(TildeModule(critical, critical, TildeVariant::CRITICAL_INDUCED), PreconditionError);
  CHECK_THROWS_AS(TildeModule(q, critical, TildeVariant::FREE_D), PreconditionError);
  TildeModule lam(generic, generic, TildeVariant::LAMBDA_QUOTIENT, Rational(1));
  CHECK_THROWS_AS(lam.apply_casimir(embed(unit_vector())), PreconditionError);
  CHECK(to_string(TildeVariant::CRITICAL_INDUCED) == "CRITICAL_INDUCED");
}
