// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#include "matorth/diffop.hpp"

#include <ostream>
#include <sstream>

namespace matorth {

namespace {

void require_same_size(const MatDiffOp& a, const MatDiffOp& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("operator size mismatch");
  }
}

// Binomial coefficients as exact scalars; orders here are small.
GaussianRational binom(std::size_t n, std::size_t k) {
  if (k > n) return GaussianRational(0);
  Rational r(1);
  for (std::size_t i = 0; i < k; ++i) {
    r *= Rational(static_cast<long>(n - i));
    r /= Rational(static_cast<long>(i + 1));
  }
  return GaussianRational(r);
}

MatR zero_mat(Eigen::Index n) {
  return MatR::Constant(n, n, RatFun());
}

}  // namespace

MatDiffOp MatDiffOp::from_coeffs(std::vector<MatR> coeffs) {
  if (coeffs.empty()) {
    throw std::invalid_argument("from_coeffs requires at least one coefficient");
  }
  const Eigen::Index n = coeffs.front().rows();
  for (const auto& c : coeffs) {
    if (c.rows() != n || c.cols() != n) {
      throw std::invalid_argument("coefficient size mismatch");
    }
  }
  MatDiffOp d(n);
  d.coeffs_ = std::move(coeffs);
  d.trim();
  return d;
}

MatDiffOp MatDiffOp::from_poly_coeffs(const std::vector<MatP>& coeffs) {
  std::vector<MatR> r;
  r.reserve(coeffs.size());
  for (const auto& c : coeffs) r.push_back(to_ratfun(c));
  return from_coeffs(std::move(r));
}

MatDiffOp MatDiffOp::multiplication(const MatP& m) {
  return from_coeffs({to_ratfun(m)});
}

MatDiffOp MatDiffOp::multiplication(const MatS& m) {
  return multiplication(from_scalar(m));
}

MatDiffOp MatDiffOp::identity(Eigen::Index size) {
  return from_coeffs({MatR::Identity(size, size)});
}

MatDiffOp MatDiffOp::derivative_op(Eigen::Index size) {
  return from_coeffs({zero_mat(size), MatR::Identity(size, size)});
}

void MatDiffOp::trim() {
  while (!coeffs_.empty() && is_zero_matrix(coeffs_.back())) {
    coeffs_.pop_back();
  }
}

MatR MatDiffOp::coeff(std::size_t j) const {
  if (j < coeffs_.size()) return coeffs_[j];
  return zero_mat(size_);
}

const MatR& MatDiffOp::leading_coeff() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero operator");
  return coeffs_.back();
}

bool MatDiffOp::is_polynomial() const {
  for (const auto& c : coeffs_) {
    if (!matorth::is_polynomial(c)) return false;
  }
  return true;
}

MatP MatDiffOp::poly_coeff(std::size_t j) const { return to_poly(coeff(j)); }

bool MatDiffOp::has_banded_degrees() const {
  if (!is_polynomial()) return false;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const auto deg = max_degree(to_poly(coeffs_[j]));
    if (deg && *deg > j) return false;
  }
  return true;
}

MatDiffOp MatDiffOp::operator-() const {
  MatDiffOp r(size_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

MatDiffOp MatDiffOp::operator+(const MatDiffOp& o) const {
  require_same_size(*this, o);
  std::vector<MatR> c(std::max(coeffs_.size(), o.coeffs_.size()),
                      zero_mat(size_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j] = coeffs_[j];
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[j] += o.coeffs_[j];
  if (c.empty()) return MatDiffOp(size_);
  return from_coeffs(std::move(c));
}

MatDiffOp MatDiffOp::operator-(const MatDiffOp& o) const {
  return *this + (-o);
}

MatDiffOp scale(const MatDiffOp& d, const GaussianRational& c) {
  if (d.is_zero() || c.is_zero()) return MatDiffOp(d.size());
  std::vector<MatR> coeffs;
  coeffs.reserve(d.coeffs().size());
  for (const auto& f : d.coeffs()) coeffs.push_back(scale(f, c));
  return MatDiffOp::from_coeffs(std::move(coeffs));
}

MatR apply(const MatP& p, const MatDiffOp& d) {
  if (p.rows() != d.size() || p.cols() != d.size()) {
    throw std::invalid_argument("apply: size mismatch");
  }
  MatR result = zero_mat(d.size());
  MatP deriv = p;
  for (std::size_t j = 0; j < d.coeffs().size(); ++j) {
    if (j > 0) deriv = derivative(deriv);
    if (is_zero_matrix(deriv)) break;
    result += to_ratfun(deriv) * d.coeffs()[j];
  }
  return result;
}

MatP apply_poly(const MatP& p, const MatDiffOp& d) {
  return to_poly(apply(p, d));
}

MatDiffOp compose(const MatDiffOp& a, const MatDiffOp& b) {
  require_same_size(a, b);
  if (a.is_zero() || b.is_zero()) return MatDiffOp(a.size());
  const std::size_t sa = *a.order();
  const std::size_t sb = *b.order();
  std::vector<MatR> h(sa + sb + 1, zero_mat(a.size()));
  // (P A) B = sum_j (sum_i P^(i) F_i)^(j) G_j; expanding the j-fold
  // derivative by Leibniz puts C(j,u) F_i^(j-u) G_j at d^(i+u).
  for (std::size_t i = 0; i <= sa; ++i) {
    MatR f_deriv = a.coeffs()[i];
    for (std::size_t d = 0; d <= sb; ++d) {
      if (d > 0) f_deriv = derivative(f_deriv);
      if (is_zero_matrix(f_deriv)) break;
      for (std::size_t j = d; j <= sb; ++j) {
        const std::size_t u = j - d;
        const MatR& g = b.coeffs()[j];
        if (is_zero_matrix(g)) continue;
        const MatR product = f_deriv * g;
        h[i + u] += scale(product, binom(j, u));
      }
    }
  }
  return MatDiffOp::from_coeffs(std::move(h));
}

MatDiffOp op_pow(const MatDiffOp& d, std::size_t k) {
  MatDiffOp r = MatDiffOp::identity(d.size());
  for (std::size_t i = 0; i < k; ++i) r = compose(r, d);
  return r;
}

MatDiffOp formal_adjoint(const MatDiffOp& d) {
  if (d.is_zero()) return d;
  const std::size_t s = *d.order();
  std::vector<MatR> g(s + 1, MatR::Constant(d.size(), d.size(), RatFun()));
  // (d^i F_i)* = F_i^* (-d)^i; commuting the coefficient back across the
  // derivatives with Leibniz gives, in standard form,
  //   G_k = sum_{i >= k} (-1)^i C(i, i-k) (F_i^*)^(i-k).
  for (std::size_t i = 0; i <= s; ++i) {
    MatR fstar = hermitian_conjugate(d.coeffs()[i]);
    if (is_zero_matrix(fstar)) continue;
    const GaussianRational sign(i % 2 == 0 ? 1 : -1);
    for (std::size_t k = i + 1; k-- > 0;) {
      MatR term = fstar;
      for (std::size_t t = 0; t < i - k; ++t) term = derivative(term);
      if (is_zero_matrix(term)) continue;
      g[k] += scale(term, sign * binom(i, i - k));
    }
  }
  return MatDiffOp::from_coeffs(std::move(g));
}

Poly falling_factorial(std::size_t j) {
  Poly p(1);
  for (std::size_t i = 0; i < j; ++i) {
    p *= Poly{GaussianRational(-static_cast<long>(i)), GaussianRational(1)};
  }
  return p;
}

MatP falling_factorial_symbol(const MatDiffOp& d) {
  if (!d.is_polynomial()) {
    throw std::domain_error("falling-factorial symbol needs polynomial coefficients");
  }
  MatP sym = MatP::Constant(d.size(), d.size(), Poly());
  for (std::size_t j = 0; j < d.coeffs().size(); ++j) {
    const MatS top = coefficient_matrix(to_poly(d.coeffs()[j]), j);
    if (is_zero_matrix(top)) continue;
    const Poly ff = falling_factorial(j);
    for (Eigen::Index r = 0; r < d.size(); ++r) {
      for (Eigen::Index c = 0; c < d.size(); ++c) {
        if (top(r, c).is_zero()) continue;
        sym(r, c) += ff * top(r, c);
      }
    }
  }
  return sym;
}

DegreePreservingResult degree_preserving_test(const MatDiffOp& v) {
  DegreePreservingResult res;
  if (v.is_zero()) {
    res.reason = "zero operator annihilates every polynomial";
    res.witness = 0;
    return res;
  }
  if (!v.is_polynomial()) {
    res.reason = "coefficients are not polynomial";
    return res;
  }
  for (std::size_t j = 0; j < v.coeffs().size(); ++j) {
    const auto deg = max_degree(to_poly(v.coeffs()[j]));
    if (deg && *deg > j) {
      res.reason = "deg(F_j) > j";
      res.witness = static_cast<long>(j);
      return res;
    }
  }
  const Poly det_symbol = determinant(falling_factorial_symbol(v));
  if (const auto root = smallest_nonneg_integer_root(det_symbol)) {
    res.reason = "leading symbol singular at n = " + std::to_string(*root);
    res.witness = *root;
    return res;
  }
  res.preserving = true;
  return res;
}

std::string to_string(const MatDiffOp& d, const std::string& var) {
  if (d.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = d.coeffs().size(); j-- > 0;) {
    if (is_zero_matrix(d.coeffs()[j])) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 1) {
      os << "d ";
    } else if (j > 1) {
      os << "d^" << j << " ";
    }
    os << to_string(d.coeffs()[j], var);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MatDiffOp& d) {
  return os << to_string(d);
}

}  // namespace matorth
