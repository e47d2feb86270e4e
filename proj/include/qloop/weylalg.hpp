#pragma once

#include <map>

#include "qloop/dpoly.hpp"
#include "qloop/module.hpp"

namespace qloop {

/// The presented commutative algebra attached to a weight lambda: a Laurent
/// polynomial ring in the generators L_1, ..., L_lambda with L_lambda
/// invertible. Negative-index generators reduce through
/// L_lambda L_{-s} = L_{lambda-s}; indices beyond lambda are zero.
class ALambdaAlgebra {
 public:
  ALambdaAlgebra(long lambda, const QParam& q);

  long lambda() const { return lambda_; }

  /// Element: sparse sum of monomials. Exponent vector has lambda entries
  /// for L_1 ... L_lambda; the last may be negative.
  using Monomial = std::vector<long>;
  using Element = std::map<Monomial, Scalar>;

  Element one() const;
  Element zero() const { return {}; }

  /// The image of the generator with index r in [-lambda, lambda]\{0}.
  /// Returns zero() for |r| > lambda.
  Element generator(long r) const;

  Element mul(const Element& x, const Element& y) const;
  Element add(const Element& x, const Element& y) const;

  /// Normal form of a product word of generator indices.
  Element word(const std::vector<long>& indices) const;

 private:
  long lambda_;
  QParam q_;
};

/// Finite-dimensional module over the algebra: commuting action matrices
/// for L_1 ... L_lambda, the last one invertible.
struct ALambdaModule {
  long lambda = 0;
  long dim = 0;
  std::vector<QMat> action;  // action[r-1] is the matrix of L_r
  std::string label;
};

/// One-dimensional module where L_r acts by the u^r coefficient of pi.
ALambdaModule evaluation_character(const DrinfeldPoly& pi, long lambda);

struct IdealQuotientResult {
  ALambdaModule mod;            // the two-dimensional quotient
  long codimension = 0;         // must come out 2
  bool membership_ok = false;   // every printed generator vanishes at pi
  bool non_split = false;       // some L_r matrix is non-diagonalizable
  Scalar eigenvalue;            // the joint eigenvalue of L_1
  std::vector<Scalar> point;    // coefficients of the squared string
};

/// The rank-two quotient of the algebra at lambda = 2m carved out by the
/// squared-eigenvalue generator and the three-term recurrence family;
/// throws when the computed codimension is not 2.
IdealQuotientResult ideal_I_quotient(long m, const Scalar& a, const QParam& q);

/// Tensor product of two-dimensional fundamental modules, one per spectral
/// root of pi counted with multiplicity, ordered so the top vector is
/// cyclic (certified by spinning). Throws if no ordering works.
Module local_weyl(const DrinfeldPoly& pi, const QParam& q);

/// (computed, expected): self-extension dimension of the local Weyl module
/// against the degree of pi.
std::pair<long, long> ext_weyl_dimension_check(const DrinfeldPoly& pi,
                                               const QParam& q);

}  // namespace qloop
