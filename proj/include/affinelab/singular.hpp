#pragma once

#include "affinelab/linalg.hpp"
#include "affinelab/pbw_module.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace affinelab {

struct TruncationWindow {
  int h_max = 0;
  int l_max = 0;
  std::optional<Rational> weight;
};

enum class Verdict { ONLY_TRIVIAL, EXTRA_SINGULAR_FOUND };
std::string to_string(Verdict v);

template <class Vector>
struct BasicSingularReport {
  TruncationWindow window;
  int cutoff = 0;  // constraint cutoff I actually used
  int widen = 0;
  int basis_size = 0;
  std::map<Rational, int> singular_dimension_by_weight;
  std::vector<Vector> representatives;
  Verdict verdict = Verdict::ONLY_TRIVIAL;

  int dimension() const { return static_cast<int>(representatives.size()); }
};

using SingularReport = BasicSingularReport<ModuleVector>;

// One defining condition of a singular vector: w ↦ g·w - shift·w.
struct SingularCondition {
  Generator g;
  Rational shift;
};

// e(j) for 0 <= j <= I, f(N+i) and h(i) - φ(h(i)) for 1 <= i <= I.
std::vector<SingularCondition> singular_conditions(const WhittakerDatum& phi, int cutoff);
int constraint_cutoff(const WhittakerDatum& phi, const TruncationWindow& window, Truncation t = {});

bool satisfies_conditions(const Representation& rep, const WhittakerDatum& phi, const ModuleVector& w, int cutoff);

// All γ with Ht ≤ h_max, ℓ ≤ l_max (and the window weight, if set), in
// report order. include_h = false restricts to an empty h-block.
std::vector<GammaTriple> enumerate_basis(const Module& m, const TruncationWindow& window, bool include_h = true);

// Images of one window basis vector under one condition.
struct ConstraintRow {
  std::size_t condition;  // index into singular_conditions
  std::size_t basis_index;
  ModuleVector image;
};

struct ConstraintSystem {
  std::vector<GammaTriple> basis;
  std::vector<SingularCondition> conditions;
  std::vector<ConstraintRow> rows;
  int cutoff = 0;
};

ConstraintSystem constraint_rows(const Module& m, const TruncationWindow& window, Truncation t = {});

// Exact kernel of the linear map basis -> ⊕_ops images, returned as the
// canonical basis (coefficient 1 on the last basis element of each vector).
template <class Key>
std::vector<Combination<Key>> solve_kernel(const std::vector<Key>& basis,
                                           const std::vector<std::function<Combination<Key>(const Key&)>>& ops) {
  std::map<std::pair<std::size_t, Key>, RationalRow> rows;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t o = 0; o < ops.size(); ++o) {
      for (const auto& [k, c] : ops[o](basis[j])) rows[{o, k}][static_cast<int>(j)] = c;
    }
  }
  std::vector<RationalRow> flat;
  flat.reserve(rows.size());
  for (auto& [key, row] : rows) flat.push_back(std::move(row));
  std::vector<Combination<Key>> out;
  for (const DenseVector& v : canonical_basis(nullspace(static_cast<int>(basis.size()), flat))) {
    Combination<Key> w;
    for (std::size_t j = 0; j < v.size(); ++j) w.add(basis[j], v[j]);
    out.push_back(std::move(w));
  }
  return out;
}

// Singular vectors of any representation on a fixed index basis, solved per
// weight class. Representatives come back in report order of their leading
// index.
SingularReport solve_singular(const Representation& rep, const Module& shape, const std::vector<GammaTriple>& basis,
                              const TruncationWindow& window, int cutoff, int widen);

SingularReport singular_space(const Module& m, const TruncationWindow& window, Truncation t = {});

enum class Prediction { PREDICTED_IRREDUCIBLE, PREDICTED_REDUCIBLE };
enum class Consistency { CONSISTENT, INCONSISTENT, INCONCLUSIVE };
std::string to_string(Prediction p);
std::string to_string(Consistency c);

struct CriterionReport {
  WhittakerDatum reduced;  // φ after twisting to n1 = -1
  int twist = 0;           // k with reduced = twist_hom(φ, k)
  Prediction prediction = Prediction::PREDICTED_IRREDUCIBLE;
  std::string reason;
  SingularReport scan;
  Consistency consistency = Consistency::CONSISTENT;
  std::string detail;
};

CriterionReport criterion_report(const WhittakerDatum& phi, const TruncationWindow& window, Truncation t = {});

}  // namespace affinelab
