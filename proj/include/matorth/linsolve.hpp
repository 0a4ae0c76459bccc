// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MATORTH_LINSOLVE_HPP
#define MATORTH_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "matorth/matrices.hpp"

namespace matorth {

// Exact Gaussian elimination over a field (Q or Q(i)). Pivots are chosen by
// deterministic first-nonzero scan so reduced forms, ranks, and nullspace
// bases are reproducible across runs and platforms.

template <class F>
struct RrefResult {
  Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic> mat;
  std::vector<Eigen::Index> pivot_cols;

  Eigen::Index rank() const {
    return static_cast<Eigen::Index>(pivot_cols.size());
  }
};

template <class F>
RrefResult<F> reduced_row_echelon(
    Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic> m) {
  RrefResult<F> out;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!is_zero(m(i, c))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const F inv = field_inverse(m(r, c));
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const F factor = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) {
        m(i, j) = m(i, j) - factor * m(r, j);
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.mat = std::move(m);
  return out;
}

template <class F>
Eigen::Index rank(const Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>& m) {
  return reduced_row_echelon<F>(m).rank();
}

/// Basis of {v : Av = 0}, one basis vector per column, built from the
/// reduced row echelon form (dimension = cols - rank).
template <class F>
Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic> nullspace(
    const Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>& a) {
  using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
  const auto rr = reduced_row_echelon<F>(a);
  const Eigen::Index cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Mat basis(cols, static_cast<Eigen::Index>(free_cols.size()));
  basis.setConstant(F(0));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index fc = free_cols[k];
    basis(fc, static_cast<Eigen::Index>(k)) = F(1);
    for (Eigen::Index i = 0; i < rr.rank(); ++i) {
      basis(rr.pivot_cols[i], static_cast<Eigen::Index>(k)) = -rr.mat(i, fc);
    }
  }
  return basis;
}

/// Solves AX = B exactly for square nonsingular A; nullopt otherwise.
template <class F>
std::optional<Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>> solve_exact(
    const Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>& b) {
  using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.rows() != a.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument("solve_exact: dimension mismatch");
  }
  const Eigen::Index n = a.rows();
  Mat aug(n, n + b.cols());
  aug.leftCols(n) = a;
  aug.rightCols(b.cols()) = b;
  const auto rr = reduced_row_echelon<F>(std::move(aug));
  if (rr.rank() != n ||
      (rr.rank() > 0 && rr.pivot_cols.back() >= n)) {
    return std::nullopt;
  }
  return Mat(rr.mat.rightCols(b.cols()));
}

}  // namespace matorth

#endif  // MATORTH_LINSOLVE_HPP
