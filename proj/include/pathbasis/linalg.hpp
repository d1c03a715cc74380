/*
  Exact rational linear algebra for small dense matrices.

  Everything here is deterministic: pivots are chosen first-nonzero in fixed
  row/column order, never by magnitude. All rank and span decisions in the
  library go through these routines; no floating point is involved.
*/
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

namespace pathbasis::linalg {

using Rational = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

bool is_integral(const RatVec& v);

// In-place reduced row echelon form; returns the pivot column of each
// surviving row, in row order.
std::vector<std::size_t> rref(RatMat& rows, std::size_t cols);

std::size_t rank(RatMat rows, std::size_t cols);

// Incremental row-space basis; used for greedy maximal independent subsets.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  // Reduces v against the kept rows; keeps it if a nonzero residual remains.
  // Returns true when the row was independent (and was kept).
  bool insert(RatVec v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  // Residual of v after reduction against the kept rows; zero iff v is in
  // the span.
  RatVec reduce(RatVec v) const;
  bool in_span(const RatVec& v) const;

 private:
  std::size_t cols_;
  std::vector<RatVec> rows_;              // each normalized to pivot 1
  std::vector<std::size_t> pivot_cols_;   // parallel to rows_
};

// Indices (in input order) of a greedy maximal linearly independent subset:
// row i is kept iff it is independent of the kept rows before it.
std::vector<std::size_t> greedy_independent_rows(const RatMat& rows, std::size_t cols);

// Basis of { y : <row, y> = 0 for every row }. Its size is cols - rank.
// The span of the rows is exactly the set of vectors orthogonal to all
// returned basis vectors, which makes bulk span-membership checks cheap.
RatMat null_space(RatMat rows, std::size_t cols);

struct Solution {
  RatVec coefficients;
  bool integral = false;
};

// Solves sum_i c_i * columns[i] = target exactly. Returns the canonical
// solution: elimination proceeds over columns left to right and free
// variables are set to zero. nullopt when the system is inconsistent.
std::optional<Solution> solve_combination(const RatMat& columns, const RatVec& target);

}  // namespace pathbasis::linalg
