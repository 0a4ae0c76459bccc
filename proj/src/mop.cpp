// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#include "matorth/mop.hpp"

#include "matorth/linsolve.hpp"

namespace matorth {

namespace {

MatP shift_by_x(const MatP& p) {
  MatP r(p.rows(), p.cols());
  const Poly x = Poly::x();
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = 0; j < p.cols(); ++j) r(i, j) = p(i, j) * x;
  return r;
}

}  // namespace

MopTable MopTable::build(const MatrixWeight& weight, std::size_t max_degree) {
  const Eigen::Index n_mat = weight.size();
  const auto moments = matrix_moments(weight, 2 * max_degree);
  std::vector<MatP> polys;
  polys.push_back(MatP::Identity(n_mat, n_mat));
  for (std::size_t n = 1; n <= max_degree; ++n) {
    // Monic ansatz P_n = x^n I + sum_{j<n} A_j x^j with the orthogonality
    // conditions sum_j A_j S_{j+k} = -S_{n+k} for k = 0..n-1. The system
    // matrix is independent of the target row of the A_j.
    const Eigen::Index dim = static_cast<Eigen::Index>(n) * n_mat;
    MatS sys(dim, dim);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        // block row k, block column j: equation coefficient of A_j's row
        // against column c is S_{j+k}(t, c) for unknown component t.
        for (Eigen::Index c = 0; c < n_mat; ++c) {
          for (Eigen::Index t = 0; t < n_mat; ++t) {
            sys(static_cast<Eigen::Index>(k) * n_mat + c,
                static_cast<Eigen::Index>(j) * n_mat + t) =
                moments[j + k](t, c);
          }
        }
      }
    }
    MatS rhs(dim, n_mat);  // one column per row index of the A_j
    for (std::size_t k = 0; k < n; ++k) {
      for (Eigen::Index c = 0; c < n_mat; ++c) {
        for (Eigen::Index r = 0; r < n_mat; ++r) {
          rhs(static_cast<Eigen::Index>(k) * n_mat + c, r) =
              -moments[n + k](r, c);
        }
      }
    }
    const auto solution = solve_exact<GaussianRational>(sys, rhs);
    if (!solution) {
      throw std::domain_error(
          "singular moment system; the weight is not a valid weight matrix");
    }
    MatP p(n_mat, n_mat);
    for (Eigen::Index r = 0; r < n_mat; ++r) {
      for (Eigen::Index c = 0; c < n_mat; ++c) {
        std::vector<GaussianRational> coeffs(n + 1);
        for (std::size_t j = 0; j < n; ++j) {
          coeffs[j] = (*solution)(static_cast<Eigen::Index>(j) * n_mat + c, r);
        }
        coeffs[n] = GaussianRational(r == c ? 1 : 0);
        p(r, c) = Poly(std::move(coeffs));
      }
    }
    polys.push_back(std::move(p));
  }
  std::vector<MatS> norms;
  norms.reserve(polys.size());
  for (const auto& p : polys) {
    norms.push_back(inner_product(p, p, weight));
  }
  return MopTable(weight, std::move(polys), std::move(norms));
}

RecurrenceCoeffs recurrence_coeffs(const MopTable& table, std::size_t n) {
  if (n + 1 > table.max_degree()) {
    throw std::out_of_range("recurrence_coeffs: table too short");
  }
  const MatrixWeight& w = table.weight();
  const MatP xpn = shift_by_x(table.poly(n));
  RecurrenceCoeffs rc;
  rc.b = inner_product(xpn, table.poly(n), w) * inverse(table.norm(n));
  if (n == 0) {
    rc.c = MatS::Constant(w.size(), w.size(), GaussianRational(0));
  } else {
    rc.c = inner_product(xpn, table.poly(n - 1), w) * inverse(table.norm(n - 1));
  }
  // The recursion must close exactly as a polynomial identity.
  MatP residual = xpn - table.poly(n + 1) - from_scalar(rc.b) * table.poly(n);
  if (n > 0) residual -= from_scalar(rc.c) * table.poly(n - 1);
  if (!is_zero_matrix(residual)) {
    throw std::logic_error("three-term recursion identity failed");
  }
  return rc;
}

GeneralRecurrence general_recurrence(const std::vector<MatP>& q,
                                     const MatrixWeight& w, std::size_t n) {
  if (n + 1 >= q.size()) {
    throw std::out_of_range("general_recurrence: sequence too short");
  }
  for (std::size_t i = 0; i <= n + 1; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!is_zero_matrix(inner_product(q[i], q[j], w))) {
        throw std::invalid_argument("general_recurrence: input is not orthogonal");
      }
    }
  }
  const MatP xq = shift_by_x(q[n]);
  GeneralRecurrence gr;
  gr.a = inner_product(xq, q[n + 1], w) * inverse(inner_product(q[n + 1], q[n + 1], w));
  gr.b = inner_product(xq, q[n], w) * inverse(inner_product(q[n], q[n], w));
  if (n == 0) {
    gr.c = MatS::Constant(w.size(), w.size(), GaussianRational(0));
  } else {
    gr.c = inner_product(xq, q[n - 1], w) *
           inverse(inner_product(q[n - 1], q[n - 1], w));
  }
  MatP residual = xq - from_scalar(gr.a) * q[n + 1] - from_scalar(gr.b) * q[n];
  if (n > 0) residual -= from_scalar(gr.c) * q[n - 1];
  if (!is_zero_matrix(residual)) {
    throw std::logic_error("general recurrence identity failed");
  }
  return gr;
}

}  // namespace matorth
