#include "pathbasis/linalg.hpp"

#include <stdexcept>

namespace pathbasis::linalg {

bool is_integral(const RatVec& v) {
  for (const Rational& q : v) {
    if (boost::multiprecision::denominator(q) != 1) return false;
  }
  return true;
}

std::vector<std::size_t> rref(RatMat& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    if (const Rational d = rows[r][col]; d != 1) {
      for (std::size_t j = col; j < cols; ++j) rows[r][j] /= d;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank(RatMat rows, std::size_t cols) {
  return rref(rows, cols).size();
}

bool RowSpace::insert(RatVec v) {
  if (v.size() != cols_) throw std::invalid_argument("RowSpace: wrong width");
  v = reduce(std::move(v));
  std::size_t c = 0;
  while (c < cols_ && v[c] == 0) ++c;
  if (c == cols_) return false;
  if (const Rational d = v[c]; d != 1) {
    for (std::size_t j = c; j < cols_; ++j) v[j] /= d;
  }
  rows_.push_back(std::move(v));
  pivot_cols_.push_back(c);
  return true;
}

RatVec RowSpace::reduce(RatVec v) const {
  // Each stored row is already reduced against all earlier rows, so a single
  // pass in storage order clears every pivot column.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = v[pivot_cols_[k]];
    if (f == 0) continue;
    const RatVec& row = rows_[k];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (row[j] != 0) v[j] -= f * row[j];
    }
  }
  return v;
}

bool RowSpace::in_span(const RatVec& v) const {
  RatVec r = reduce(v);
  for (const Rational& q : r) {
    if (q != 0) return false;
  }
  return true;
}

std::vector<std::size_t> greedy_independent_rows(const RatMat& rows, std::size_t cols) {
  RowSpace space(cols);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (space.insert(rows[i])) kept.push_back(i);
  }
  return kept;
}

RatMat null_space(RatMat rows, std::size_t cols) {
  const std::vector<std::size_t> pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  RatMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec y(cols, 0);
    y[f] = 1;
    for (std::size_t j = 0; j < pivots.size(); ++j) y[pivots[j]] = -rows[j][f];
    basis.push_back(std::move(y));
  }
  return basis;
}

std::optional<Solution> solve_combination(const RatMat& columns, const RatVec& target) {
  const std::size_t n = columns.size();
  const std::size_t m = target.size();
  for (const RatVec& c : columns) {
    if (c.size() != m) throw std::invalid_argument("solve_combination: ragged columns");
  }

  // Augmented system [A | target] with A[r][i] = columns[i][r].
  RatMat a(m, RatVec(n + 1, 0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < n; ++i) a[r][i] = columns[i][r];
    a[r][n] = target[r];
  }

  std::size_t rank_rows = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < n && rank_rows < m; ++col) {
    std::size_t p = rank_rows;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[rank_rows], a[p]);
    if (const Rational d = a[rank_rows][col]; d != 1) {
      for (std::size_t j = col; j <= n; ++j) a[rank_rows][j] /= d;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank_rows || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[rank_rows][j];
    }
    pivot_cols.push_back(col);
    ++rank_rows;
  }
  for (std::size_t r = rank_rows; r < m; ++r) {
    if (a[r][n] != 0) return std::nullopt;  // inconsistent
  }

  Solution s;
  s.coefficients.assign(n, 0);
  for (std::size_t j = 0; j < pivot_cols.size(); ++j) {
    s.coefficients[pivot_cols[j]] = a[j][n];
  }
  s.integral = is_integral(s.coefficients);
  return s;
}

}  // namespace pathbasis::linalg
