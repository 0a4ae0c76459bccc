// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MATORTH_MATRICES_HPP
#define MATORTH_MATRICES_HPP

#include <Eigen/Core>

#include <string>

#include "matorth/ratfun.hpp"

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 20,
    MulCost = 20
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<matorth::GaussianRational>
    : GenericNumTraits<matorth::GaussianRational> {
  typedef matorth::GaussianRational Real;
  typedef matorth::GaussianRational NonInteger;
  typedef matorth::GaussianRational Nested;
  typedef matorth::GaussianRational Literal;
  enum {
    IsComplex = 0,  // conjugation is handled explicitly, never by Eigen
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<matorth::Poly> : GenericNumTraits<matorth::Poly> {
  typedef matorth::Poly Real;
  typedef matorth::Poly NonInteger;
  typedef matorth::Poly Nested;
  typedef matorth::Poly Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 100,
    MulCost = 400
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<matorth::RatFun> : GenericNumTraits<matorth::RatFun> {
  typedef matorth::RatFun Real;
  typedef matorth::RatFun NonInteger;
  typedef matorth::RatFun Nested;
  typedef matorth::RatFun Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 32,
    AddCost = 400,
    MulCost = 1000
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace matorth {

/// Dense matrices over the three scalar rings. All sizes in this library are
/// tiny (N <= 3 block sizes, solver systems a few hundred rows), so the
/// dynamic-size types are used throughout.
using MatS = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using MatP = Eigen::Matrix<Poly, Eigen::Dynamic, Eigen::Dynamic>;
using MatR = Eigen::Matrix<RatFun, Eigen::Dynamic, Eigen::Dynamic>;
using VecS = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

template <class Mat>
bool is_zero_matrix(const Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

// Entrywise coefficient conjugation (the variable stays real).
MatS conj_entries(const MatS& m);
MatP conj_entries(const MatP& m);
MatR conj_entries(const MatR& m);

/// Conjugate transpose: entrywise coefficient conjugation followed by
/// transposition. An involution on each matrix ring.
template <class Mat>
Mat hermitian_conjugate(const Mat& m) {
  return conj_entries(m).transpose();
}

MatP derivative(const MatP& m);
MatR derivative(const MatR& m);

MatR to_ratfun(const MatP& m);
/// Throws std::domain_error naming the offending entry if any entry has a
/// nontrivial denominator.
MatP to_poly(const MatR& m);
bool is_polynomial(const MatR& m);
MatP from_scalar(const MatS& m);

MatS evaluate(const MatP& m, const GaussianRational& point);

/// Matrix of the x^k coefficients of every entry.
MatS coefficient_matrix(const MatP& m, std::size_t k);
/// Largest entry degree, or nullopt for the zero matrix.
std::optional<std::size_t> max_degree(const MatP& m);

MatP scale(const MatP& m, const GaussianRational& c);
MatR scale(const MatR& m, const GaussianRational& c);
MatS scale(const MatS& m, const GaussianRational& c);

/// Laplace cofactor expansion; intended for the N <= 4 sizes used here.
GaussianRational determinant(const MatS& m);
Poly determinant(const MatP& m);
RatFun determinant(const MatR& m);

struct SingularMatrixError : std::domain_error {
  explicit SingularMatrixError(const std::string& what)
      : std::domain_error(what) {}
};

/// Exact inverse via adjugate over determinant. Throws SingularMatrixError
/// (carrying the determinant) when det = 0.
MatR adjugate(const MatR& m);
MatR inverse(const MatR& m);
MatS inverse(const MatS& m);

std::string to_string(const MatP& m, const std::string& var = "x");
std::string to_string(const MatR& m, const std::string& var = "x");
std::string to_string(const MatS& m);

}  // namespace matorth

#endif  // MATORTH_MATRICES_HPP
