#pragma once

#include <utility>
#include <vector>

#include "qloop/matrix.hpp"
#include "qloop/scalar.hpp"

namespace qloop {

/// Polynomial in one indeterminate over the rationals; c[i] is the t^i
/// coefficient, trailing zeros stripped (zero polynomial = empty vector).
struct TPoly {
  std::vector<Scalar> c;

  TPoly() = default;
  explicit TPoly(const Scalar& constant);
  static TPoly variable();  // t

  long degree() const { return long(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  void normalize();

  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  bool operator==(const TPoly& o) const { return c == o.c; }

  /// Exact quotient; throws if the division leaves a remainder.
  TPoly div_exact(const TPoly& o) const;

  TPoly derivative() const;
  Scalar eval(const Scalar& x) const;
};

/// det(t I - M), coefficients ascending.
TPoly char_poly(const QMat& m);

struct RationalRoots {
  std::vector<std::pair<Scalar, long>> roots;  // (root, multiplicity)
  bool complete;  // true iff the polynomial splits into rational linear factors
};

/// All rational roots with multiplicities (constant-free polynomials only).
RationalRoots rational_roots(const TPoly& p);

/// Matrix with entries in Q[t].
using TMat = std::vector<std::vector<TPoly>>;

struct PencilRank {
  long rank;    // rank over Q(t)
  TPoly minor;  // a nonzero rank x rank minor; specializations that drop
                // rank must be roots of it
};

/// Fraction-free (Bareiss) elimination over Q[t].
PencilRank pencil_rank(TMat m);

}  // namespace qloop
