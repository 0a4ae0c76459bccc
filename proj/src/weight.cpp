// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#include "matorth/weight.hpp"

#include <sstream>

namespace matorth {

namespace {

GaussianRational binom(std::size_t n, std::size_t k) {
  if (k > n) return GaussianRational(0);
  Rational r(1);
  for (std::size_t i = 0; i < k; ++i) {
    r *= Rational(static_cast<long>(n - i));
    r /= Rational(static_cast<long>(i + 1));
  }
  return GaussianRational(r);
}

std::vector<GaussianRational> interior_sample_points(Support support) {
  switch (support) {
    case Support::RealLine:
      return {GaussianRational(-2), GaussianRational(Rational(-1, 2)),
              GaussianRational(0), GaussianRational(1), GaussianRational(3)};
    case Support::PositiveHalfLine:
      return {GaussianRational(Rational(1, 4)), GaussianRational(Rational(1, 2)),
              GaussianRational(1), GaussianRational(2), GaussianRational(5)};
    case Support::UnitInterval:
      return {GaussianRational(Rational(-3, 4)), GaussianRational(Rational(-1, 3)),
              GaussianRational(0), GaussianRational(Rational(1, 3)),
              GaussianRational(Rational(3, 4))};
  }
  throw std::logic_error("unreachable");
}

bool is_hermitian(const MatS& m) {
  return m == hermitian_conjugate(m);
}

// Exact positive definiteness via leading principal minors.
bool positive_definite(const MatS& m) {
  for (Eigen::Index k = 1; k <= m.rows(); ++k) {
    const MatS minor = m.topLeftCorner(k, k);
    const GaussianRational det = determinant(minor);
    if (!det.is_real() || det.re() <= 0) return false;
  }
  return true;
}

// Vanishing order of an entry at a finite support endpoint.
long endpoint_order(const RatFun& r, const GaussianRational& point) {
  return order_at(r, point);
}

struct FiniteEndpoint {
  GaussianRational point;
  Rational exponent;  // s(x) ~ (x - point)^exponent up to sign/scale
};

std::vector<FiniteEndpoint> finite_endpoints(const Kernel& kernel) {
  switch (kernel.family()) {
    case KernelFamily::Hermite:
      return {};
    case KernelFamily::Laguerre:
      return {{GaussianRational(0), kernel.alpha()}};
    case KernelFamily::Jacobi:
      return {{GaussianRational(1), kernel.alpha()},
              {GaussianRational(-1), kernel.beta()}};
  }
  throw std::logic_error("unreachable");
}

// lim_{x->endpoint} s(x) r(x) = 0 at every endpoint of the support, decided
// by exact order analysis.
bool vanishes_at_endpoints(const RatFun& r, const Kernel& kernel) {
  if (r.is_zero()) return true;
  for (const auto& ep : finite_endpoints(kernel)) {
    const Rational total =
        ep.exponent + Rational(endpoint_order(r, ep.point));
    if (total <= 0) return false;
  }
  // At infinite endpoints the exponential factor dominates any rational
  // growth; Jacobi has no infinite endpoint.
  return true;
}

}  // namespace

MatrixWeight::MatrixWeight(Kernel kernel, MatP h, std::optional<MatP> t)
    : kernel_(std::move(kernel)), h_(std::move(h)), t_(std::move(t)) {
  if (h_.rows() != h_.cols() || h_.rows() == 0) {
    throw std::invalid_argument("weight matrix must be square and nonempty");
  }
  const auto deg = max_degree(h_);
  const std::size_t top = deg ? *deg : 0;
  for (std::size_t k = 0; k <= top; ++k) {
    if (!is_hermitian(coefficient_matrix(h_, k))) {
      throw std::invalid_argument(
          "weight polynomial factor must have Hermitian coefficient matrices");
    }
  }
  if (determinant(h_).is_zero()) {
    throw std::invalid_argument("weight polynomial factor is singular");
  }
  for (const auto& pt : interior_sample_points(kernel_.support())) {
    if (!positive_definite(evaluate(h_, pt))) {
      throw std::invalid_argument(
          "weight is not positive definite at interior sample point " +
          display_string(pt));
    }
  }
  // Integrability at finite endpoints: kernel exponent plus the entry's
  // vanishing order must exceed -1. Automatic for alpha, beta > -1.
  for (const auto& ep : finite_endpoints(kernel_)) {
    for (Eigen::Index i = 0; i < h_.rows(); ++i) {
      for (Eigen::Index j = 0; j < h_.cols(); ++j) {
        if (h_(i, j).is_zero()) continue;
        const Rational order(static_cast<long>(root_order(h_(i, j), ep.point)));
        if (ep.exponent + order <= -1) {
          throw std::invalid_argument("weight entry is not integrable at endpoint");
        }
      }
    }
  }
  if (t_) {
    // H must equal T diag(h) T^* with diagonal polynomial middle factor.
    if (t_->rows() != h_.rows() || t_->cols() != h_.cols()) {
      throw std::invalid_argument("T factor size mismatch");
    }
    const MatR t_inv = inverse(to_ratfun(*t_));
    const MatR middle =
        t_inv * to_ratfun(h_) * hermitian_conjugate(t_inv);
    for (Eigen::Index i = 0; i < middle.rows(); ++i) {
      for (Eigen::Index j = 0; j < middle.cols(); ++j) {
        if (i != j && !middle(i, j).is_zero()) {
          throw std::invalid_argument(
              "T factor does not diagonalize the polynomial part");
        }
        if (i == j && !middle(i, j).is_polynomial()) {
          throw std::invalid_argument("T factor yields non-polynomial diagonal");
        }
      }
    }
  }
}

MatS matrix_moment(const MatrixWeight& w, std::size_t m) {
  return matrix_moments(w, m).back();
}

std::vector<MatS> matrix_moments(const MatrixWeight& w, std::size_t max_index) {
  const auto deg = max_degree(w.h());
  const std::size_t hdeg = deg ? *deg : 0;
  const auto scalar_moments = w.kernel().moments(max_index + hdeg);
  std::vector<MatS> result;
  result.reserve(max_index + 1);
  std::vector<MatS> h_coeffs;
  for (std::size_t l = 0; l <= hdeg; ++l) {
    h_coeffs.push_back(coefficient_matrix(w.h(), l));
  }
  for (std::size_t m = 0; m <= max_index; ++m) {
    MatS s = MatS::Constant(w.size(), w.size(), GaussianRational(0));
    for (std::size_t l = 0; l <= hdeg; ++l) {
      s += scale(h_coeffs[l], GaussianRational(scalar_moments[m + l]));
    }
    result.push_back(std::move(s));
  }
  return result;
}

MatS inner_product(const MatP& p, const MatP& q, const MatrixWeight& w) {
  if (p.rows() != w.size() || q.rows() != w.size() || p.cols() != w.size() ||
      q.cols() != w.size()) {
    throw std::invalid_argument("inner_product: size mismatch");
  }
  const auto pdeg = max_degree(p);
  const auto qdeg = max_degree(q);
  if (!pdeg || !qdeg) {
    return MatS::Constant(w.size(), w.size(), GaussianRational(0));
  }
  const auto moments = matrix_moments(w, *pdeg + *qdeg);
  MatS acc = MatS::Constant(w.size(), w.size(), GaussianRational(0));
  for (std::size_t j = 0; j <= *pdeg; ++j) {
    const MatS pj = coefficient_matrix(p, j);
    if (is_zero_matrix(pj)) continue;
    for (std::size_t k = 0; k <= *qdeg; ++k) {
      const MatS qk = coefficient_matrix(q, k);
      if (is_zero_matrix(qk)) continue;
      acc += pj * moments[j + k] * hermitian_conjugate(qk);
    }
  }
  return acc;
}

MatR kernel_frame_derivative(const MatR& m, const Kernel& kernel) {
  const RatFun logd = kernel.log_derivative();
  MatR r = derivative(m);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      r(i, j) += logd * m(i, j);
    }
  }
  return r;
}

MatDiffOp w_adjoint(const MatDiffOp& d, const MatrixWeight& w) {
  if (d.size() != w.size()) throw std::invalid_argument("w_adjoint: size mismatch");
  if (d.is_zero()) return d;
  const MatDiffOp star = formal_adjoint(d);
  const std::size_t s = *star.order();
  const MatR h = to_ratfun(w.h());
  const MatR h_inv = inverse(h);
  // W d^k G_k W^{-1} = sum_j C(k,j) d^{k-j} L^j(H) G_k H^{-1}, where the
  // scalar kernel cancels between W and W^{-1}.
  std::vector<MatR> twisted{h};  // L^j(H)
  for (std::size_t j = 1; j <= s; ++j) {
    twisted.push_back(kernel_frame_derivative(twisted.back(), w.kernel()));
  }
  std::vector<MatR> out(s + 1, MatR::Constant(d.size(), d.size(), RatFun()));
  for (std::size_t k = 0; k <= s; ++k) {
    const MatR& g = star.coeffs()[k];
    if (is_zero_matrix(g)) continue;
    const MatR tail = g * h_inv;
    for (std::size_t j = 0; j <= k; ++j) {
      const MatR term = twisted[j] * tail;
      out[k - j] += scale(term, binom(k, j));
    }
  }
  return MatDiffOp::from_coeffs(std::move(out));
}

bool formal_symmetry_test(const MatDiffOp& d, const MatrixWeight& w) {
  const bool symmetric = (w_adjoint(d, w) == d);
  if (!d.is_zero() && *d.order() == 2) {
    // Classical order-2 symmetry equations, evaluated in the kernel frame,
    // as an independent check on the adjoint path:
    //   F2 H = H F2*,
    //   2 L(F2 H) - F1 H = H F1*,
    //   L^2(F2 H) - L(F1 H) + F0 H = H F0*.
    const MatR h = to_ratfun(w.h());
    const MatR f0 = d.coeff(0), f1 = d.coeff(1), f2 = d.coeff(2);
    const MatR e1 = f2 * h - h * hermitian_conjugate(f2);
    const MatR l_f2h = kernel_frame_derivative(f2 * h, w.kernel());
    const MatR e2 = scale(l_f2h, GaussianRational(2)) - f1 * h -
                    h * hermitian_conjugate(f1);
    const MatR e3 = kernel_frame_derivative(l_f2h, w.kernel()) -
                    kernel_frame_derivative(f1 * h, w.kernel()) + f0 * h -
                    h * hermitian_conjugate(f0);
    const bool classical =
        is_zero_matrix(e1) && is_zero_matrix(e2) && is_zero_matrix(e3);
    if (classical != symmetric) {
      throw std::logic_error(
          "order-2 symmetry equations disagree with the adjoint computation");
    }
  }
  return symmetric;
}

bool boundary_check(const MatDiffOp& d, const MatrixWeight& w) {
  if (!d.is_polynomial()) {
    throw std::invalid_argument("boundary_check requires polynomial coefficients");
  }
  if (d.is_zero()) return true;
  const std::size_t n = *d.order();
  const MatR h = to_ratfun(w.h());
  // L^t(F_{n-j} H) caches, indexed by coefficient then derivative count.
  std::vector<std::vector<MatR>> twisted(n + 1);
  for (std::size_t idx = 0; idx <= n; ++idx) {
    twisted[idx].push_back(d.coeff(idx) * h);
  }
  for (std::size_t p = 1; p <= n; ++p) {
    for (std::size_t k = 0; k + p <= n; ++k) {
      MatR sum = MatR::Constant(d.size(), d.size(), RatFun());
      for (std::size_t j = 0; j < p; ++j) {
        const std::size_t idx = n - j;
        auto& cache = twisted[idx];
        while (cache.size() <= p - 1 - j) {
          cache.push_back(kernel_frame_derivative(cache.back(), w.kernel()));
        }
        GaussianRational sign((n - j + p - 1) % 2 == 0 ? 1 : -1);
        sum += scale(cache[p - 1 - j], sign * binom(n - j, k));
      }
      for (Eigen::Index r = 0; r < sum.rows(); ++r) {
        for (Eigen::Index c = 0; c < sum.cols(); ++c) {
          if (!vanishes_at_endpoints(sum(r, c), w.kernel())) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace matorth
