#include "qloop/scalar.hpp"

namespace qloop {

Scalar scalar_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  mpq_class x;
  if (x.set_str(s, 10) != 0)
    throw std::invalid_argument("bad scalar literal: " + s);
  if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  x.canonicalize();
  return x;
}

std::string scalar_to_string(const Scalar& x) {
  return x.get_str();
}

Scalar scalar_pow(const Scalar& x, long e) {
  if (e == 0) return Scalar(1);
  if (x == 0) {
    if (e < 0) throw std::domain_error("0 has no negative powers");
    return Scalar(0);
  }
  mpz_class num = x.get_num(), den = x.get_den();
  if (e < 0) {
    std::swap(num, den);
    e = -e;
  }
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
  Scalar r(pn, pd);
  r.canonicalize();
  return r;
}

bool as_power_of(const Scalar& x, const Scalar& q, long& e) {
  if (x == 0 || q == 0 || q == 1 || q == -1) return false;
  if (x == 1) {
    e = 0;
    return true;
  }
  // walk up and down a bounded number of steps; exact comparisons only
  Scalar up = q, down = Scalar(1) / q;
  Scalar y(1);
  for (long k = 1; k <= 256; ++k) {
    y *= up;
    if (y == x) {
      e = k;
      return true;
    }
  }
  y = 1;
  for (long k = 1; k <= 256; ++k) {
    y *= down;
    if (y == x) {
      e = -k;
      return true;
    }
  }
  return false;
}

}  // namespace qloop
