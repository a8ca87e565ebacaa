#pragma once

#include "affinelab/pbw_module.hpp"

#include <utility>
#include <vector>

namespace affinelab {

// Q(n) = 1/4 Σ_i (2:e(-i)f(n+i): + 2:f(-i)e(n+i): + :h(-i)h(n+i):) is the
// shared kernel; T(n) = Q(n) at κ = -2 and L(n) = Q(n)/(κ+2) otherwise.
enum class Normalization { RAW_QUARTER_SUM, CRITICAL_T, VIRASORO_L };

struct QuadraticOperator {
  int n = 0;
  Normalization normalization = Normalization::RAW_QUARTER_SUM;
};

// :x(a)y(b): = x(a)y(b) if a < 0, else y(b)x(a). word[0] is leftmost.
std::vector<Generator> normal_ordered(const Generator& x, const Generator& y);

// Half-width R of the i-range [-R, R] used for Q(n) on a monomial with bound B:
// R = B + |n| + 1 + widen.
int quadratic_range(int bound, int n, Truncation t = {});

ModuleVector apply_quadratic(const Representation& rep, int n, const ModuleVector& v, Truncation t = {});
ModuleVector apply_T(const Representation& rep, int n, const ModuleVector& v, Truncation t = {});
ModuleVector apply_L(const Representation& rep, int n, const ModuleVector& v, Truncation t = {});
ModuleVector apply(const Representation& rep, const QuadraticOperator& op, const ModuleVector& v, Truncation t = {});

struct TauExpression {
  int n = 0;
  std::vector<std::pair<std::vector<Generator>, Rational>> terms;
};

// Finite word list with evaluate(τ(n), u) = 4 T(n) u, obtained from the words
// of 4 Q(n) by dropping those whose rightmost letter annihilates u and merging
// repeated words. Needs κ = -2, a reduced module and n < N.
TauExpression build_tau(const Module& m, int n);

ModuleVector evaluate(const Representation& rep, const TauExpression& tau, const ModuleVector& v);

}  // namespace affinelab
