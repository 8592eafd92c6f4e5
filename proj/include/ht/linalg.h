// Exact dense linear algebra over a field (Q or Q(v)).
#pragma once

#include "ht/laurent.h"

#include <optional>
#include <utility>
#include <vector>

namespace ht {

inline bool field_is_zero(const Rational& a) { return a == 0; }
inline bool field_is_zero(const RationalFunction& a) { return a.is_zero(); }

template <class F>
using Mat = std::vector<std::vector<F>>;

// Row-echelon accumulator.  Rows are kept fully reduced against each other,
// so membership tests and final back-substitution are cheap.
template <class F>
class RowReducer {
 public:
  explicit RowReducer(std::size_t ncols) : ncols_(ncols) {}

  // Reduces `row` against the basis; returns the residual.
  std::vector<F> reduce(std::vector<F> row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const F& f = row[pivots_[k]];
      if (field_is_zero(f)) continue;
      F c = f;
      const auto& r = rows_[k];
      for (std::size_t j = 0; j < ncols_; ++j)
        if (!field_is_zero(r[j])) row[j] -= c * r[j];
    }
    return row;
  }

  // Adds `row` if it is independent of the rows so far; returns whether it was.
  bool add(std::vector<F> row) {
    row = reduce(std::move(row));
    std::size_t p = 0;
    while (p < ncols_ && field_is_zero(row[p])) ++p;
    if (p == ncols_) return false;
    F inv = F(1) / row[p];
    for (auto& a : row)
      if (!field_is_zero(a)) a *= inv;
    for (auto& r : rows_) {
      if (field_is_zero(r[p])) continue;
      F c = r[p];
      for (std::size_t j = 0; j < ncols_; ++j)
        if (!field_is_zero(row[j])) r[j] -= c * row[j];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const Mat<F>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t ncols_;
  Mat<F> rows_;
  std::vector<std::size_t> pivots_;
};

template <class F>
std::size_t rank(const Mat<F>& a) {
  if (a.empty()) return 0;
  RowReducer<F> rr(a[0].size());
  for (const auto& r : a) rr.add(r);
  return rr.rank();
}

// Some solution of a x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Mat<F>& a, const std::vector<F>& b) {
  std::size_t n = a.empty() ? 0 : a[0].size();
  RowReducer<F> rr(n + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto row = a[i];
    row.push_back(b[i]);
    rr.add(std::move(row));
  }
  std::vector<F> x(n, F(0));
  for (std::size_t k = 0; k < rr.rank(); ++k) {
    if (rr.pivots()[k] == n) return std::nullopt;
    x[rr.pivots()[k]] = rr.rows()[k][n];
  }
  return x;
}

// Basis of {x : a x = 0}.
template <class F>
Mat<F> nullspace(const Mat<F>& a, std::size_t ncols) {
  RowReducer<F> rr(ncols);
  for (const auto& r : a) rr.add(r);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : rr.pivots()) is_pivot[p] = true;
  Mat<F> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> x(ncols, F(0));
    x[f] = F(1);
    for (std::size_t k = 0; k < rr.rank(); ++k) x[rr.pivots()[k]] = -rr.rows()[k][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& a) {
  std::size_t n = a.size();
  RowReducer<F> rr(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = a[i];
    row.resize(2 * n, F(0));
    row[n + i] = F(1);
    rr.add(std::move(row));
  }
  if (rr.rank() != n) return std::nullopt;
  Mat<F> inv(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (rr.pivots()[k] >= n) return std::nullopt;
    inv[rr.pivots()[k]] = std::vector<F>(rr.rows()[k].begin() + n, rr.rows()[k].end());
  }
  return inv;
}

template <class F>
Mat<F> matmul(const Mat<F>& a, const Mat<F>& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Mat<F> c(n, std::vector<F>(m, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (field_is_zero(a[i][t])) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!field_is_zero(b[t][j])) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

template <class F>
Mat<F> identity_matrix(std::size_t n) {
  Mat<F> m(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

// The rational k-th root of x, if one exists (k >= 1; negative x needs odd k).
std::optional<Rational> rational_root(const Rational& x, int k);
// Integer k-th root, if exact.
std::optional<Integer> integer_root(const Integer& x, int k);

// Exact characteristic polynomial det(t I - a), coefficients from t^0 upward.
std::vector<Rational> char_poly(const Mat<Rational>& a);

}  // namespace ht
