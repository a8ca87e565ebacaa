#include "affinelab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace affinelab {

namespace {

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// a*x - b*y on sorted sparse rows.
SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, -b * j->second);
      ++j;
    } else {
      Integer v = a * i->second - b * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow primitive_row(const RationalRow& row) {
  Integer den = 1;
  for (const auto& [c, v] : row) {
    if (is_zero(v)) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  SparseRow out;
  for (const auto& [c, v] : row) {
    if (is_zero(v)) continue;
    Integer scaled = v.get_num() * (den / v.get_den());
    out.emplace_back(c, std::move(scaled));
  }
  make_primitive(out);
  return out;
}

void IntegerEchelon::reduce(SparseRow& row) const {
  std::size_t pos = 0;
  while (pos < row.size()) {
    const int col = row[pos].first;
    const int p = pivot_row_[static_cast<std::size_t>(col)];
    if (p < 0) {
      ++pos;
      continue;
    }
    const SparseRow& piv = rows_[static_cast<std::size_t>(p)];
    // Entries left of col are untouched: the pivot row starts at col.
    Integer a = piv.front().second;
    Integer b = row[pos].second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    SparseRow head(row.begin(), row.begin() + static_cast<long>(pos));
    SparseRow tail(row.begin() + static_cast<long>(pos), row.end());
    SparseRow reduced = combine(a, tail, b, piv);
    for (auto& [c, v] : head) v *= a;
    head.insert(head.end(), reduced.begin(), reduced.end());
    row = std::move(head);
    make_primitive(row);
  }
}

bool IntegerEchelon::add(const RationalRow& r) {
  SparseRow row = primitive_row(r);
  for (const auto& [c, v] : row) {
    if (c < 0 || c >= cols_) throw std::out_of_range("row column outside matrix");
  }
  reduce(row);
  if (row.empty()) return false;
  pivot_row_[static_cast<std::size_t>(row.front().first)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::vector<DenseVector> IntegerEchelon::kernel() const {
  // Back substitution over the rationals, pivots in decreasing column order.
  std::vector<int> pivots;
  for (int c = 0; c < cols_; ++c)
    if (pivot_row_[static_cast<std::size_t>(c)] >= 0) pivots.push_back(c);

  std::vector<RationalRow> reduced(static_cast<std::size_t>(cols_));
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const int pc = *it;
    const SparseRow& row = rows_[static_cast<std::size_t>(pivot_row_[static_cast<std::size_t>(pc)])];
    const Rational lead(row.front().second);
    RationalRow out;
    for (std::size_t k = 1; k < row.size(); ++k) {
      const int c = row[k].first;
      const Rational val = Rational(row[k].second) / lead;
      if (pivot_row_[static_cast<std::size_t>(c)] >= 0) {
        // x_c is itself expressed through free columns.
        for (const auto& [fc, fv] : reduced[static_cast<std::size_t>(c)]) out[fc] += val * fv;
      } else {
        out[c] += val;
      }
    }
    // x_pc = -Σ out[f] x_f
    RationalRow expr;
    for (const auto& [fc, fv] : out)
      if (!is_zero(fv)) expr[fc] = -fv;
    reduced[static_cast<std::size_t>(pc)] = std::move(expr);
  }

  std::vector<DenseVector> basis;
  for (int f = 0; f < cols_; ++f) {
    if (pivot_row_[static_cast<std::size_t>(f)] >= 0) continue;
    DenseVector v(static_cast<std::size_t>(cols_), Rational(0));
    v[static_cast<std::size_t>(f)] = 1;
    for (int pc : pivots) {
      auto it = reduced[static_cast<std::size_t>(pc)].find(f);
      if (it != reduced[static_cast<std::size_t>(pc)].end()) v[static_cast<std::size_t>(pc)] = it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<DenseVector> nullspace(int cols, const std::vector<RationalRow>& rows) {
  IntegerEchelon ech(cols);
  for (const auto& r : rows) {
    if (ech.rank() == cols) break;
    ech.add(r);
  }
  return ech.kernel();
}

std::vector<DenseVector> canonical_basis(const std::vector<DenseVector>& vectors) {
  std::vector<DenseVector> rows;
  std::vector<std::size_t> lead;  // last nonzero position of rows[i]
  auto last_nonzero = [](const DenseVector& v) -> long {
    for (std::size_t i = v.size(); i-- > 0;)
      if (!is_zero(v[i])) return static_cast<long>(i);
    return -1;
  };
  for (DenseVector v : vectors) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational c = v[lead[i]];
      if (is_zero(c)) continue;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!is_zero(rows[i][k])) v[k] -= c * rows[i][k];
    }
    const long l = last_nonzero(v);
    if (l < 0) continue;
    const Rational inv = 1 / v[static_cast<std::size_t>(l)];
    for (auto& x : v) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational c = rows[i][static_cast<std::size_t>(l)];
      if (is_zero(c)) continue;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!is_zero(v[k])) rows[i][k] -= c * v[k];
    }
    rows.push_back(std::move(v));
    lead.push_back(static_cast<std::size_t>(l));
  }
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lead[a] < lead[b]; });
  std::vector<DenseVector> out;
  out.reserve(rows.size());
  for (std::size_t i : order) out.push_back(std::move(rows[i]));
  return out;
}

int rank_of(const std::vector<DenseVector>& vectors) { return static_cast<int>(canonical_basis(vectors).size()); }

bool in_span(const std::vector<DenseVector>& basis, const DenseVector& v) {
  std::vector<DenseVector> all = basis;
  const int r = rank_of(all);
  all.push_back(v);
  return rank_of(all) == r;
}

}  // namespace affinelab
