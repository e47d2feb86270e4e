#pragma once

#include <map>
#include <vector>

#include "qloop/scalar.hpp"

namespace qloop {

/// Dense power-series / polynomial coefficients, index = degree.
using Coeffs = std::vector<Scalar>;

/// [m] = (q^m - q^-m)/(q - q^-1). Odd in m; [0] = 0, [1] = 1.
Scalar q_int(long m, const QParam& q);

/// [l]! = [l][l-1]...[1], with [0]! = 1. Requires l >= 0.
Scalar q_factorial(long l, const QParam& q);

/// Gaussian binomial [l; r] = [l]!/([l-r]![r]!). Requires 0 <= r <= l.
Scalar q_binom(long l, long r, const QParam& q);

/// Coefficients of exp(sum_s c_s u^s) through degree `order`.
/// The input map may not contain a degree-0 term.
Coeffs truncated_exp_series(const std::map<long, Scalar>& coeffs, long order);

/// Inverse of the above: coefficients of log(g) for a series with g[0] = 1.
Coeffs truncated_log_series(const Coeffs& g, long order);

Coeffs series_mul(const Coeffs& a, const Coeffs& b, long order);

/// a/b as a power series; b[0] must be nonzero.
Coeffs series_div(const Coeffs& a, const Coeffs& b, long order);

}  // namespace qloop
