#include "affinelab/runner.hpp"

#include "affinelab/checks.hpp"
#include "affinelab/quotient.hpp"
#include "affinelab/sugawara.hpp"
#include "affinelab/takiff.hpp"

#include <algorithm>
#include <memory>

namespace affinelab {

Json config_echo(const ExperimentConfig& c) {
  Json j;
  j["command"] = c.command;
  j["n1"] = c.n1;
  j["n2"] = c.n2;
  Json h = Json::array();
  for (const auto& v : c.h_values) h.push_back(to_fraction_string(v));
  j["h_values"] = h;
  j["kappa"] = to_fraction_string(c.kappa);
  Json th = Json::array();
  for (const auto& [i, v] : c.theta) th.push_back(Json::array({i, to_fraction_string(v)}));
  j["theta"] = th;
  j["lambda"] = c.lambda ? Json(to_fraction_string(*c.lambda)) : Json(nullptr);
  j["h_max"] = c.h_max;
  j["l_max"] = c.l_max;
  j["weight"] = c.weight ? Json(to_fraction_string(*c.weight)) : Json(nullptr);
  j["d_max"] = c.d_max;
  j["seed"] = c.seed;
  j["widen"] = c.widen;
  j["variant"] = c.variant;
  j["depth"] = c.depth;
  j["samples"] = c.samples;
  return j;
}

Json to_json(const GammaTriple& g) { return Json::array({g.gp, g.g0, g.gm}); }

Json to_json(const ModuleVector& v, const Module& order) {
  Json out = Json::array();
  for (const auto& [g, c] : order.ordered_terms(v)) {
    out.push_back(Json{{"index", to_json(g)}, {"coeff", to_fraction_string(c)}});
  }
  return out;
}

Json to_json(const TildeVector& v, const Module& order) {
  std::vector<std::pair<TildeKey, Rational>> terms(v.begin(), v.end());
  std::sort(terms.begin(), terms.end(), [&order](const auto& a, const auto& b) {
    if (a.first.d != b.first.d) return a.first.d < b.first.d;
    return order.report_less(a.first.gamma, b.first.gamma);
  });
  Json out = Json::array();
  for (const auto& [k, c] : terms) {
    out.push_back(Json{{"d", k.d}, {"index", to_json(k.gamma)}, {"coeff", to_fraction_string(c)}});
  }
  return out;
}

namespace {

Json window_json(const TruncationWindow& w) {
  return Json{{"h_max", w.h_max},
              {"l_max", w.l_max},
              {"weight", w.weight ? Json(to_fraction_string(*w.weight)) : Json(nullptr)}};
}

template <class Report, class Ser>
Json report_json(const Report& r, Ser&& serialize) {
  Json dims = Json::array();
  for (const auto& [w, d] : r.singular_dimension_by_weight) dims.push_back(Json::array({to_fraction_string(w), d}));
  Json reps = Json::array();
  for (const auto& v : r.representatives) reps.push_back(serialize(v));
  return Json{{"window", window_json(r.window)},
              {"basis_size", r.basis_size},
              {"singular_dimension_by_weight", dims},
              {"representatives", reps},
              {"verdict", to_string(r.verdict)}};
}

Json check_json(const CheckResult& c) {
  Json j{{"name", c.name}, {"samples", c.samples}, {"failures", c.failures}, {"passed", c.passed()}};
  if (c.first_failure) j["first_failure"] = *c.first_failure;
  return j;
}

WhittakerDatum datum_of(const ExperimentConfig& c) { return WhittakerDatum{c.n1, c.n2, c.kappa, c.h_values}; }

TruncationWindow window_of(const ExperimentConfig& c) { return {c.h_max, c.l_max, c.weight}; }

struct Builder {
  RunOutcome out;
  Json checks = Json::array();
  bool ok = true;

  void check(const CheckResult& c) {
    checks.push_back(check_json(c));
    ok = ok && c.passed();
    out.summary.push_back(c.name + ": " + (c.passed() ? "pass" : "FAIL") + " (" + std::to_string(c.samples) +
                          " samples)");
  }
  void flag(bool good, const std::string& line) {
    ok = ok && good;
    out.summary.push_back(line);
  }
};

// Corpus for a possibly non-reduced module: reduced indices pulled back
// through the twist bijection.
std::vector<GammaTriple> general_corpus(const WhittakerDatum& phi, int h_max, int l_max) {
  const int k = phi.n1 + 1;
  Module reduced(twist_hom(phi, k));
  if (reduced.phi().n2 < 1) return {GammaTriple{}};
  std::vector<GammaTriple> out;
  for (const auto& g : corpus(reduced, h_max, l_max)) out.push_back(shift_index(g, k));
  return out;
}

void verify_axioms(const ExperimentConfig& c, Builder& b, Json& results) {
  const WhittakerDatum phi = datum_of(c);
  Module m(phi);
  b.check(bracket_axioms(6));
  b.check(hom_vanishing(phi, c.samples, c.seed));
  const auto cor = general_corpus(phi, std::min(c.h_max, 8), std::min(c.l_max, 4));
  b.check(module_axiom_fuzz(m, cor, c.samples, 6, c.seed + 1));
  results["corpus_size"] = cor.size();
  results["max_mode"] = 6;
}

void singular_scan(const ExperimentConfig& c, Builder& b, Json& results, Json& margins) {
  Module m(datum_of(c));
  const Truncation t{c.widen};
  const SingularReport r = singular_space(m, window_of(c), t);
  margins["constraint_cutoff"] = r.cutoff;
  results["scan"] = report_json(r, [&m](const ModuleVector& v) { return to_json(v, m); });
  bool all = true;
  for (const auto& w : r.representatives) all = all && satisfies_conditions(m, m.phi(), w, r.cutoff + 5);
  margins["recheck_cutoff"] = r.cutoff + 5;
  b.flag(all, std::string("representatives re-verified at cutoff + 5: ") + (all ? "yes" : "NO"));
  b.out.summary.push_back("verdict " + to_string(r.verdict) + ", basis " + std::to_string(r.basis_size) +
                          ", singular dimension " + std::to_string(r.dimension()));
}

void criterion(const ExperimentConfig& c, Builder& b, Json& results, Json& margins) {
  const CriterionReport r = criterion_report(datum_of(c), window_of(c), Truncation{c.widen});
  Module shape(r.reduced);
  margins["constraint_cutoff"] = r.scan.cutoff;
  results["twist"] = r.twist;
  Json red;
  red["n1"] = r.reduced.n1;
  red["n2"] = r.reduced.n2;
  Json hv = Json::array();
  for (const auto& v : r.reduced.h_values) hv.push_back(to_fraction_string(v));
  red["h_values"] = hv;
  red["kappa"] = to_fraction_string(r.reduced.kappa);
  results["reduced_datum"] = red;
  results["prediction"] = to_string(r.prediction);
  results["reason"] = r.reason;
  results["scan"] = report_json(r.scan, [&shape](const ModuleVector& v) { return to_json(v, shape); });
  results["consistency"] = to_string(r.consistency);
  results["detail"] = r.detail;
  b.flag(r.consistency != Consistency::INCONSISTENT,
         to_string(r.prediction) + " / " + to_string(r.scan.verdict) + " -> " + to_string(r.consistency));
}

void sugawara_check(const ExperimentConfig& c, Builder& b, Json& results, Json& margins) {
  Module m(datum_of(c));
  const Truncation t{c.widen};
  const int n = c.n2;
  margins["quadratic_range_extra"] = c.widen;
  const auto cor = corpus(m, std::min(c.h_max, 4), std::min(c.l_max, 3));
  if (c.kappa == -2) {
    Json tau = Json::array();
    CheckResult tau_check{"4T(n)u = tau(n)u", 0, 0, std::nullopt};
    std::vector<int> ns{n - 1, n - 2, -1, -2};
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (int k : ns) {
      const ModuleVector lhs = apply_T(m, k, unit_vector(), t) * Rational(4);
      const ModuleVector rhs = evaluate(m, build_tau(m, k), unit_vector());
      tau_check.record(lhs == rhs, "n = " + std::to_string(k));
      tau.push_back(Json{{"n", k}, {"tau_u", to_json(rhs, m)}});
    }
    results["tau"] = tau;
    b.check(tau_check);
    CheckResult scalar{"T(n)u in Cu for n >= N", 0, 0, std::nullopt};
    Json scalars = Json::array();
    for (int k = n; k <= n + 2; ++k) {
      const ModuleVector v = apply_T(m, k, unit_vector(), t);
      const bool ok = v.empty() || (v.size() == 1 && v.begin()->first.empty());
      scalar.record(ok, "n = " + std::to_string(k));
      scalars.push_back(Json{{"n", k}, {"value", to_fraction_string(v.coeff(GammaTriple{}))}});
    }
    results["T_on_u"] = scalars;
    b.check(scalar);
    b.check(centrality_check(m, cor, c.samples, c.seed, t));
  } else {
    b.check(virasoro_check(m, cor, c.samples, c.seed, t));
  }
}

void takiff_check(const ExperimentConfig& c, Builder& b, Json& results) {
  const TakiffSpec spec{c.n2, c.h_values, c.kappa};
  const WilsonScan w = wilson_scan(spec, c.depth);
  Json dims = Json::array();
  for (int d : w.dimension_by_length) dims.push_back(d);
  Json wit = Json::array();
  for (const auto& v : w.witnesses) {
    Json terms = Json::array();
    for (const auto& [g, coeff] : v) terms.push_back(Json{{"f_modes", g.gm}, {"coeff", to_fraction_string(coeff)}});
    wit.push_back(terms);
  }
  results["wilson"] = Json{{"depth", w.depth},
                           {"found", w.found ? "FOUND" : "NONE"},
                           {"dimension_by_length", dims},
                           {"witnesses", wit},
                           {"rule", w.rule},
                           {"predicted_reducible", w.predicted_reducible},
                           {"consistent", w.consistent}};
  b.flag(w.consistent, std::string("wilson scan ") + (w.found ? "FOUND" : "NONE") + " -> " +
                           (w.consistent ? "CONSISTENT" : "INCONSISTENT"));
  if (c.n2 >= 1) {
    const IntertwineResult r = intertwine_check(spec, c.samples, c.seed);
    CheckResult cr{"Takiff intertwining", r.samples, r.failures, r.first_failure};
    b.check(cr);
  } else {
    results["intertwine"] = "skipped: N = 0 has no affine counterpart (n1 + n2 < 0)";
  }
}

void quotient_scan(const ExperimentConfig& c, Builder& b, Json& results, Json& margins) {
  Module m(datum_of(c));
  const Truncation t{c.widen};
  Quotient q(m, CriticalQuotientSpec{m.phi(), c.theta}, t);
  const SingularReport r = quotient_singular_space(q, window_of(c), t);
  margins["constraint_cutoff"] = r.cutoff;
  margins["quadratic_range_extra"] = c.widen;
  results["scan"] = report_json(r, [&m](const ModuleVector& v) { return to_json(v, m); });
  results["largest_theta_index"] = q.largest_theta_index();
  b.flag(r.verdict == Verdict::ONLY_TRIVIAL, "quotient verdict " + to_string(r.verdict));
}

void tilde_scan(const ExperimentConfig& c, Builder& b, Json& results, Json& margins) {
  Module m(datum_of(c));
  const Truncation t{c.widen};
  std::unique_ptr<Quotient> q;
  TildeVariant variant = TildeVariant::FREE_D;
  if (c.variant == "LAMBDA_QUOTIENT") variant = TildeVariant::LAMBDA_QUOTIENT;
  if (c.variant == "CRITICAL_INDUCED") {
    variant = TildeVariant::CRITICAL_INDUCED;
    q = std::make_unique<Quotient>(m, CriticalQuotientSpec{m.phi(), c.theta}, t);
  }
  const Representation& base = q ? static_cast<const Representation&>(*q) : m;
  TildeModule tm(base, m, variant, c.lambda, t);
  const TildeSingularReport r = tilde_singular_space(tm, window_of(c), c.d_max, t);
  margins["constraint_cutoff"] = r.cutoff;
  margins["casimir_range_extra"] = c.widen;
  results["d_max"] = c.d_max;
  results["scan"] = report_json(r, [&m](const TildeVector& v) { return to_json(v, m); });
  if (q) results["largest_theta_index"] = q->largest_theta_index();

  const auto cor = enumerate_basis(m, TruncationWindow{std::min(c.h_max, 3), std::min(c.l_max, 2), std::nullopt},
                                   variant != TildeVariant::CRITICAL_INDUCED);
  b.check(tilde_axiom_fuzz(tm, cor, c.samples, c.seed, 2));
  if (variant != TildeVariant::LAMBDA_QUOTIENT) b.check(casimir_centrality(tm, cor, c.samples, c.seed + 1, 2));
  const bool expect_trivial = !is_zero(m.phi().h_value(m.phi().n2)) || variant == TildeVariant::CRITICAL_INDUCED;
  if (variant == TildeVariant::FREE_D) {
    b.out.summary.push_back("tilde verdict " + to_string(r.verdict));
  } else {
    b.flag(!expect_trivial || r.verdict == Verdict::ONLY_TRIVIAL, "tilde verdict " + to_string(r.verdict));
  }
}

void twist(const ExperimentConfig& c, Builder& b, Json& results) {
  const WhittakerDatum phi = datum_of(c);
  results["twist"] = phi.n1 + 1;
  b.check(twist_check(phi, c.samples, c.seed));
}

}  // namespace

RunOutcome run(const ExperimentConfig& config) {
  validate_config(config);
  Builder b;
  Json results = Json::object();
  Json margins{{"widen", config.widen}};

  const std::string& cmd = config.command;
  if (cmd == "verify-axioms") verify_axioms(config, b, results);
  else if (cmd == "singular-scan") singular_scan(config, b, results, margins);
  else if (cmd == "criterion-report") criterion(config, b, results, margins);
  else if (cmd == "sugawara-check") sugawara_check(config, b, results, margins);
  else if (cmd == "takiff-check") takiff_check(config, b, results);
  else if (cmd == "quotient-scan") quotient_scan(config, b, results, margins);
  else if (cmd == "tilde-scan") tilde_scan(config, b, results, margins);
  else if (cmd == "twist-check") twist(config, b, results);

  b.out.report["schema_version"] = "1";
  b.out.report["command"] = cmd;
  b.out.report["config"] = config_echo(config);
  b.out.report["margins"] = margins;
  b.out.report["results"] = results;
  b.out.report["checks"] = b.checks;
  b.out.report["status"] = b.ok ? "CONSISTENT" : "INCONSISTENT";
  b.out.exit_code = b.ok ? 0 : 2;
  return b.out;
}

}  // namespace affinelab
