#include "affinelab/checks.hpp"
#include "affinelab/pbw_module.hpp"
#include "affinelab/singular.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace affinelab;
using G = Generator;

namespace {

WhittakerDatum reduced_datum(int n, const Rational& kappa) {
  std::vector<Rational> values;
  for (int k = 0; k <= n; ++k) values.push_back(Rational(k + 1));
  return WhittakerDatum{-1, n, kappa, values};
}

GammaTriple fm(std::initializer_list<int> modes) { return GammaTriple{{}, {}, modes}; }

}  // namespace

TEST_CASE("act on the generator u") {
  Module m(WhittakerDatum{-1, 2, Rational(3), {Rational(2), Rational(5), Rational(7)}});
  CHECK(m.act(G::h(0), unit_vector()) == unit_vector() * Rational(2));
  CHECK(m.act(G::h(2), unit_vector()) == unit_vector() * Rational(7));
  CHECK(m.act(G::h(3), unit_vector()).empty());
  CHECK(m.act(G::e(0), unit_vector()).empty());
  CHECK(m.act(G::f(3), unit_vector()).empty());
  CHECK(m.act(G::f(2), unit_vector()) == monomial(fm({2})));
  CHECK(m.act(G::K(), monomial(fm({1, 2}))) == monomial(fm({1, 2}), 3));
  CHECK_THROWS_AS(m.act(G::d(), unit_vector()), PreconditionError);
}

TEST_CASE("e(0) and h(1) on f(N)u") {
  Module m(WhittakerDatum{-1, 2, Rational(1), {Rational(2), Rational(5), Rational(7)}});
  const ModuleVector fn = monomial(fm({2}));
  CHECK(m.act(G::e(0), fn) == unit_vector() * Rational(7));
  CHECK(m.act(G::h(1), fn) == fn * Rational(5));
  // e(-1) f(N) u is already ordered; f(N) e(-1) u must straighten.
  CHECK(m.act(G::e(-1), fn) == monomial(GammaTriple{{-1}, {}, {2}}));
  ModuleVector want = monomial(GammaTriple{{-1}, {}, {2}});
  want.add(GammaTriple{{}, {}, {}}, -Rational(5));  // -[e(-1), f(2)] u = -h(1) u
  CHECK(m.act(G::f(2), monomial(GammaTriple{{-1}, {}, {}})) == want);
}

TEST_CASE("act_word folds right to left") {
  Module m(reduced_datum(1, Rational(4)));
  CHECK(m.act_word({}, unit_vector()) == unit_vector());
  CHECK(m.act_word({G::e(0), G::f(1)}, unit_vector()) == m.act(G::e(0), m.act(G::f(1), unit_vector())));
  CHECK(m.act_word({G::h(0)}, unit_vector()) == unit_vector() * Rational(1));
  CHECK(m.act_word({G::f(1), G::f(1)}, unit_vector()) == monomial(fm({1, 1})));
}

TEST_CASE("weight_of") {
  Module m(WhittakerDatum{-1, 2, Rational(0), {Rational(3), Rational(1), Rational(1)}});
  CHECK(m.weight_of(GammaTriple{}) == 3);
  CHECK(m.weight_of(fm({2})) == 1);
  CHECK(m.weight_of(GammaTriple{{-1, -1}, {-3}, {2, 2}}) == 3);
}

TEST_CASE("true_height") {
  Module m(reduced_datum(1, Rational(0)));
  CHECK(m.true_height(GammaTriple{}) == 0);
  CHECK(m.true_height(fm({1})) == 0);
  CHECK(m.true_height(GammaTriple{{}, {-2}, {}}) == 3);
  CHECK(m.true_height(GammaTriple{{-1}, {-1}, {0, 1}}) == 5);
  Module general(WhittakerDatum{0, 1, Rational(0), {1, 2, 3}});
  CHECK_THROWS_AS(general.true_height(GammaTriple{}), PreconditionError);
}

TEST_CASE("annihilation bound examples and widening") {
  Module m(reduced_datum(1, Rational(2)));
  CHECK(m.annihilation_bound(unit_vector()) == 3);
  CHECK(m.act(G::f(4), unit_vector()).empty());
  const ModuleVector hv = monomial(GammaTriple{{}, {-2}, {}});
  CHECK(m.annihilation_bound(hv) == 6);
  CHECK(m.act(G::e(7), hv).empty());

  Module m2(reduced_datum(2, Rational(-3)));
  for (int p = 5; p <= 15; ++p) CHECK(m2.act(G::h(p), monomial(fm({2}))).empty());

  for (const auto* phi : {&m, &m2}) {
    const auto corpus_ = corpus(*phi, 6, 3);
    for (const auto& g : corpus_) {
      const ModuleVector v = monomial(g);
      const int b = phi->annihilation_bound(v);
      for (int p = b + 1; p <= b + 10; ++p) {
        for (const G x : {G::e(p), G::f(p), G::h(p)}) REQUIRE(phi->act(x, v).empty());
      }
    }
  }
}

TEST_CASE("direct insertion yields one monomial with coefficient 1") {
  Module m(reduced_datum(2, Rational(1)));
  for (const auto& g : corpus(m, 5, 3)) {
    const ModuleVector v = monomial(g);
    auto check = [&](const G& x) {
      const ModuleVector out = m.act(x, v);
      REQUIRE(out.size() == 1);
      CHECK(out.begin()->second == 1);
      CHECK(m.is_basis_index(out.begin()->first));
    };
    if (g.gp.empty() && g.g0.empty()) check(G::f(1));
    if (g.gp.empty()) check(G::h(-2));
    check(G::e(-3));
  }
}

TEST_CASE("module axiom on reduced and general modules") {
  for (const Rational kappa : {Rational(0), Rational(1), Rational(-2), Rational(-3)}) {
    Module m(reduced_datum(2, kappa));
    CHECK(module_axiom_fuzz(m, corpus(m, 6, 3), 60, 6, 17).passed());
  }
  for (const auto& phi : {WhittakerDatum{1, 0, Rational(2), {1, -1, 3}}, WhittakerDatum{0, 1, Rational(-2), {1, 2, 3}},
                          WhittakerDatum{2, -1, Rational(1, 2), {0, 1, 1}}}) {
    Module m(phi);
    Module reduced(twist_hom(phi, phi.n1 + 1));
    std::vector<GammaTriple> c;
    for (const auto& g : corpus(reduced, 5, 3)) c.push_back(shift_index(g, phi.n1 + 1));
    for (const auto& g : c) REQUIRE(m.is_basis_index(g));
    CHECK(module_axiom_fuzz(m, c, 80, 5, 23).passed());
  }
}

TEST_CASE("weight grading") {
  Module m(reduced_datum(1, Rational(7)));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> mode(-5, 5);
  for (const auto& g : corpus(m, 5, 3)) {
    const Rational w = m.weight_of(g);
    for (const auto& [x, shift] : {std::pair{G::e(mode(rng)), 2}, {G::f(mode(rng)), -2}, {G::h(mode(rng)), 0}}) {
      for (const auto& [out, c] : m.act(x, monomial(g))) CHECK(m.weight_of(out) == w + shift);
    }
  }
}

TEST_CASE("degree grading when phi lives on h(0) and K") {
  // With φ(h(i)) = 0 for i >= 1 the ht-grading is respected.
  Module m(WhittakerDatum{-1, 2, Rational(3), {Rational(4), 0, 0}});
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> mode(-5, 5), kind(0, 2);
  for (const auto& g : corpus(m, 5, 3)) {
    const G x{static_cast<GenKind>(kind(rng)), mode(rng)};
    for (const auto& [out, c] : m.act(x, monomial(g))) CHECK(height(out) == height(g) + x.mode);
  }
}

TEST_CASE("juxtaposition leading term") {
  Module m(reduced_datum(2, Rational(1)));
  const auto c = corpus(m, 4, 2);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
  for (int s = 0; s < 150; ++s) {
    const GammaTriple a = c[pick(rng)], b = c[pick(rng)];
    std::vector<G> word;
    for (int x : a.gp) word.push_back(G::e(x));
    for (int x : a.g0) word.push_back(G::h(x));
    for (int x : a.gm) word.push_back(G::f(x));
    const GammaTriple joined = juxtapose(a, b);
    ModuleVector rest = m.act_word(word, monomial(b));
    CHECK(rest.coeff(joined) == 1);
    rest.add(joined, -1);
    for (const auto& [g, coeff] : rest) CHECK(m.true_height(g) < m.true_height(joined));
  }
}

TEST_CASE("concurrent callers see the same results") {
  Module shared(reduced_datum(2, Rational(-2)));
  const auto c = corpus(shared, 5, 3);
  std::vector<ModuleVector> a(c.size()), b(c.size());
  auto work = [&](std::vector<ModuleVector>& out) {
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = shared.act(G::e(1), shared.act(G::f(-2), monomial(c[i])));
  };
  std::thread t1(work, std::ref(a)), t2(work, std::ref(b));
  t1.join();
  t2.join();
  Module fresh(reduced_datum(2, Rational(-2)));
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i] == fresh.act(G::e(1), fresh.act(G::f(-2), monomial(c[i]))));
  }
}

TEST_CASE("report order is by true height first") {
  Module m(reduced_datum(1, Rational(0)));
  CHECK(m.report_less(fm({1}), GammaTriple{{}, {-1}, {}}));
  CHECK(m.report_less(GammaTriple{}, fm({1})));
  const auto terms = m.ordered_terms(ModuleVector{{GammaTriple{{}, {-1}, {}}, 1}, {fm({1}), 2}, {GammaTriple{}, 3}});
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].first.empty());
  CHECK(terms[1].first == fm({1}));
}
