// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#include "matorth/matrices.hpp"

#include <sstream>

namespace matorth {

namespace {

template <class Mat, class F>
Mat map_entries(const Mat& m, F&& f) {
  Mat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = f(m(i, j));
  return r;
}

template <class Mat>
auto determinant_impl(const Mat& m) -> typename Mat::Scalar {
  using Scalar = typename Mat::Scalar;
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant of non-square matrix");
  }
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Scalar det(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    Mat minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Scalar term = m(0, j) * determinant_impl(minor);
    if (j % 2 == 0) {
      det += term;
    } else {
      det += -term;
    }
  }
  return det;
}

template <class Mat>
Mat adjugate_impl(const Mat& m) {
  using Scalar = typename Mat::Scalar;
  const Eigen::Index n = m.rows();
  Mat adj(n, n);
  if (n == 1) {
    adj(0, 0) = Scalar(1);
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Mat minor(n - 1, n - 1);
      Eigen::Index rr = 0;
      for (Eigen::Index r = 0; r < n; ++r) {
        if (r == i) continue;
        Eigen::Index cc = 0;
        for (Eigen::Index c = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Scalar cof = determinant_impl(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;  // transposed cofactor
    }
  }
  return adj;
}

}  // namespace

MatS conj_entries(const MatS& m) {
  return map_entries(m, [](const GaussianRational& z) { return conj(z); });
}
MatP conj_entries(const MatP& m) {
  return map_entries(m, [](const Poly& p) { return conj_coeffs(p); });
}
MatR conj_entries(const MatR& m) {
  return map_entries(m, [](const RatFun& r) { return conj_coeffs(r); });
}

MatP derivative(const MatP& m) {
  return map_entries(m, [](const Poly& p) { return derivative(p); });
}
MatR derivative(const MatR& m) {
  return map_entries(m, [](const RatFun& r) { return derivative(r); });
}

MatR to_ratfun(const MatP& m) {
  MatR r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = RatFun(m(i, j));
  return r;
}

MatP to_poly(const MatR& m) {
  MatP r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_polynomial()) {
        std::ostringstream os;
        os << "entry (" << i << "," << j
           << ") is not a polynomial: " << m(i, j);
        throw std::domain_error(os.str());
      }
      r(i, j) = m(i, j).num();
    }
  }
  return r;
}

bool is_polynomial(const MatR& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_polynomial()) return false;
  return true;
}

MatP from_scalar(const MatS& m) {
  MatP r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Poly(m(i, j));
  return r;
}

MatS evaluate(const MatP& m, const GaussianRational& point) {
  MatS r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      r(i, j) = m(i, j).evaluate(point);
  return r;
}

MatS coefficient_matrix(const MatP& m, std::size_t k) {
  MatS r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).coeff(k);
  return r;
}

std::optional<std::size_t> max_degree(const MatP& m) {
  std::optional<std::size_t> deg;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      auto d = m(i, j).degree();
      if (d && (!deg || *d > *deg)) deg = d;
    }
  }
  return deg;
}

MatP scale(const MatP& m, const GaussianRational& c) {
  return map_entries(m, [&](const Poly& p) { return p * c; });
}
MatR scale(const MatR& m, const GaussianRational& c) {
  return map_entries(m, [&](const RatFun& r) { return r * RatFun(c); });
}
MatS scale(const MatS& m, const GaussianRational& c) {
  return map_entries(m, [&](const GaussianRational& z) { return z * c; });
}

GaussianRational determinant(const MatS& m) { return determinant_impl(m); }
Poly determinant(const MatP& m) { return determinant_impl(m); }
RatFun determinant(const MatR& m) { return determinant_impl(m); }

MatR adjugate(const MatR& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("adjugate of non-square matrix");
  }
  return adjugate_impl(m);
}

MatR inverse(const MatR& m) {
  const RatFun det = determinant(m);
  if (det.is_zero()) {
    throw SingularMatrixError("singular matrix over rational functions, det = 0");
  }
  const RatFun det_inv = field_inverse(det);
  MatR adj = adjugate(m);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) adj(i, j) *= det_inv;
  return adj;
}

MatS inverse(const MatS& m) {
  const GaussianRational det = determinant(m);
  if (det.is_zero()) {
    throw SingularMatrixError("singular scalar matrix, det = 0");
  }
  const GaussianRational det_inv = field_inverse(det);
  MatS adj(m.rows(), m.cols());
  {
    // reuse the generic cofactor path through MatR to avoid duplication
    MatR mr(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        mr(i, j) = RatFun(m(i, j));
    MatR adjr = adjugate(mr);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        adj(i, j) = adjr(i, j).num().coeff(0) * det_inv;
  }
  return adj;
}

namespace {
template <class Mat>
std::string matrix_string(const Mat& m, const std::string& var) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i > 0) os << "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ", ";
      os << to_string(m(i, j), var);
    }
  }
  os << "]";
  return os.str();
}
}  // namespace

std::string to_string(const MatP& m, const std::string& var) {
  return matrix_string(m, var);
}
std::string to_string(const MatR& m, const std::string& var) {
  return matrix_string(m, var);
}
std::string to_string(const MatS& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i > 0) os << "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ", ";
      os << display_string(m(i, j));
    }
  }
  os << "]";
  return os.str();
}

}  // namespace matorth
