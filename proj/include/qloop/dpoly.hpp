#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qloop/qnum.hpp"
#include "qloop/scalar.hpp"

namespace qloop {

/// Element of the multiplicative monoid of polynomials with constant term 1,
/// stored as its multiset of spectral roots: pi(u) = prod (1 - a_s u)^{p_s}.
/// Roots are nonzero rationals, pairwise distinct, kept sorted.
class DrinfeldPoly {
 public:
  DrinfeldPoly() = default;  // the trivial element

  static DrinfeldPoly from_roots(std::vector<std::pair<Scalar, long>> roots);

  const std::vector<std::pair<Scalar, long>>& roots() const { return roots_; }
  long degree() const;
  bool trivial() const { return roots_.empty(); }
  bool operator==(const DrinfeldPoly& o) const { return roots_ == o.roots_; }

  /// Coefficients of the expanded polynomial (constant term 1).
  Coeffs expand() const;

  /// The reversed polynomial u^deg pi(1/u), normalized back to constant
  /// term 1: same multiset with every root inverted.
  DrinfeldPoly reversed() const;

  std::string to_string() const;

 private:
  std::vector<std::pair<Scalar, long>> roots_;
};

/// The q-string of length m centered at a: roots a q^{m-1}, a q^{m-3}, ...,
/// a q^{-m+1}, each simple.
DrinfeldPoly qstring(long m, const Scalar& a, const QParam& q);

DrinfeldPoly multiply(const DrinfeldPoly& p1, const DrinfeldPoly& p2);
DrinfeldPoly dpoly_pow(const DrinfeldPoly& p, long s);

/// Eigenvalue data of the commuting loop generators on a highest vector with
/// this Drinfeld polynomial, truncated to |r| <= R. Three families are kept:
///   h[r]          power-sum data, h_r = ([r]/r) sum_s p_s a_s^r
///   lambda[r]     coefficients of pi (r >= 0) and of the reversed pi (r < 0)
///   phi_plus/minus  Laurent expansions of q^deg * pi(u/q)/pi(qu) about 0, oo
/// and they satisfy exp(-sum h_s/[s] u^s) = sum lambda_r u^r on both sides.
struct LWeightData {
  std::map<long, Scalar> h;
  std::map<long, Scalar> lambda;
  std::map<long, Scalar> phi_plus;
  std::map<long, Scalar> phi_minus;
};

LWeightData lweight_data(const DrinfeldPoly& pi, const QParam& q, long R);

long default_window(const DrinfeldPoly& pi);

/// Maximal s with pi = pi0^s; throws on the trivial element.
std::pair<DrinfeldPoly, long> primitive_root(const DrinfeldPoly& pi);

/// The constant c with h_r(pi1) = c h_r(pi2) for all r, when one exists.
/// Present iff the root sets agree and the multiplicity vectors are
/// proportional; then c = d/d' with pi1^{d'} = pi2^{d}.
std::optional<Scalar> proportional_h(const DrinfeldPoly& p1,
                                     const DrinfeldPoly& p2, const QParam& q);

/// Grammar: `str(m,a)` (q-string), `root(a,p)` (explicit factor),
/// `*`-separated products; a is an integer or `p/q` fraction.
DrinfeldPoly parse_dpoly(const std::string& expr, const QParam& q);

}  // namespace qloop
