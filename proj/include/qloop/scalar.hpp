#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qloop {

/// Exact rational scalar. GMP keeps values in lowest terms with a
/// positive denominator, which is exactly the storage contract we need.
using Scalar = mpq_class;

/// Parse "p/q" or "p" (lowest terms not required on input).
Scalar scalar_from_string(const std::string& s);

/// Render in lowest terms: "3", "-5/2".
std::string scalar_to_string(const Scalar& x);

/// x^e for e of either sign; throws on 0^negative.
Scalar scalar_pow(const Scalar& x, long e);

/// If x = q^e for some integer e, return e.
bool as_power_of(const Scalar& x, const Scalar& q, long& e);

/// The quantum parameter. Any rational q outside {0, 1, -1} has infinite
/// multiplicative order, so the root-of-unity hypothesis never bites.
struct QParam {
  Scalar q;

  explicit QParam(const Scalar& value) : q(value) {
    if (q == 0 || q == 1 || q == -1)
      throw std::invalid_argument("q must avoid {0, 1, -1}");
  }

  Scalar pow(long e) const { return scalar_pow(q, e); }
  bool operator==(const QParam& other) const { return q == other.q; }
};

}  // namespace qloop
