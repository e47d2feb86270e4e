#include "qloop/tpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qloop {

TPoly::TPoly(const Scalar& constant) {
  if (constant != 0) c.push_back(constant);
}

TPoly TPoly::variable() {
  TPoly p;
  p.c = {Scalar(0), Scalar(1)};
  return p;
}

void TPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

TPoly TPoly::operator+(const TPoly& o) const {
  TPoly r;
  r.c.resize(std::max(c.size(), o.c.size()), Scalar(0));
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.normalize();
  return r;
}

TPoly TPoly::operator-(const TPoly& o) const {
  TPoly r;
  r.c.resize(std::max(c.size(), o.c.size()), Scalar(0));
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
  r.normalize();
  return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
  if (is_zero() || o.is_zero()) return TPoly();
  TPoly r;
  r.c.assign(c.size() + o.c.size() - 1, Scalar(0));
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (size_t j = 0; j < o.c.size(); ++j)
      if (o.c[j] != 0) r.c[i + j] += c[i] * o.c[j];
  }
  r.normalize();
  return r;
}

TPoly TPoly::div_exact(const TPoly& o) const {
  if (o.is_zero()) throw std::domain_error("polynomial division by zero");
  TPoly rem = *this, quot;
  if (rem.is_zero()) return quot;
  if (rem.degree() < o.degree())
    throw std::domain_error("inexact polynomial division");
  quot.c.assign(rem.degree() - o.degree() + 1, Scalar(0));
  while (!rem.is_zero() && rem.degree() >= o.degree()) {
    long d = rem.degree() - o.degree();
    Scalar f = rem.c.back() / o.c.back();
    quot.c[d] = f;
    for (size_t i = 0; i < o.c.size(); ++i) rem.c[d + i] -= f * o.c[i];
    rem.normalize();
  }
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  quot.normalize();
  return quot;
}

TPoly TPoly::derivative() const {
  TPoly r;
  for (size_t i = 1; i < c.size(); ++i) r.c.push_back(Scalar(long(i)) * c[i]);
  r.normalize();
  return r;
}

Scalar TPoly::eval(const Scalar& x) const {
  Scalar r(0);
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

TPoly char_poly(const QMat& m) {
  // Faddeev-LeVerrier: exact over Q.
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: square only");
  const long n = m.rows();
  std::vector<Scalar> coeff(n + 1, Scalar(0));
  coeff[n] = 1;
  QMat mk = QMat::identity(n);
  for (long k = 1; k <= n; ++k) {
    mk = m * mk;
    Scalar tr(0);
    for (long i = 0; i < n; ++i) tr += mk.at(i, i);
    Scalar ck = -tr / Scalar(k);
    coeff[n - k] = ck;
    for (long i = 0; i < n; ++i) mk.at(i, i) += ck;
  }
  TPoly p;
  p.c = coeff;
  p.normalize();
  return p;
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& n0, bool& ok) {
  // plain trial division; exact and fine at desk scale
  mpz_class n = abs(n0);
  ok = true;
  std::vector<std::pair<mpz_class, long>> fac;
  mpz_class d = 2;
  long steps = 0;
  while (n > 1) {
    if (++steps > 2000000) {
      ok = false;
      return {};
    }
    if (n % d == 0) {
      long e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.push_back({d, e});
    }
    d += (d == 2 ? 1 : 2);
    if (d * d > n && n > 1) {
      fac.push_back({n, 1});
      break;
    }
  }
  std::vector<mpz_class> divs = {1};
  for (auto& [p, e] : fac) {
    size_t m = divs.size();
    mpz_class pk = 1;
    for (long k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < m; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > 100000) {
      ok = false;
      return {};
    }
  }
  return divs;
}

}  // namespace

RationalRoots rational_roots(const TPoly& p0) {
  RationalRoots out;
  out.complete = false;
  if (p0.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
  TPoly p = p0;
  // strip roots at 0
  long z = 0;
  while (!p.is_zero() && p.c[0] == 0) {
    p.c.erase(p.c.begin());
    ++z;
  }
  if (z > 0) out.roots.push_back({Scalar(0), z});
  if (p.degree() <= 0) {
    out.complete = true;
    return out;
  }
  // clear denominators to a primitive integer polynomial
  mpz_class lcm = 1;
  for (const auto& x : p.c) lcm = lcm / gcd(lcm, x.get_den()) * x.get_den();
  std::vector<mpz_class> ic(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) {
    Scalar v = p.c[i] * Scalar(lcm);
    ic[i] = v.get_num();
  }
  bool ok1 = false, ok2 = false;
  auto dn = divisors(ic.front(), ok1);
  auto dd = divisors(ic.back(), ok2);
  if (!ok1 || !ok2) return out;  // incomplete: factoring too hard
  std::vector<Scalar> candidates;
  for (const auto& a : dn)
    for (const auto& b : dd) {
      Scalar r(a, b);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const auto& r : candidates) {
    long mult = 0;
    while (!p.is_zero() && p.degree() >= 1 && p.eval(r) == 0) {
      TPoly lin;
      lin.c = {-r, Scalar(1)};
      p = p.div_exact(lin);
      ++mult;
    }
    if (mult > 0) out.roots.push_back({r, mult});
    if (p.degree() <= 0) break;
  }
  out.complete = (p.degree() <= 0);
  return out;
}

PencilRank pencil_rank(TMat m) {
  PencilRank out;
  out.rank = 0;
  out.minor = TPoly(Scalar(1));
  if (m.empty() || m[0].empty()) return out;
  const long rows = long(m.size()), cols = long(m[0].size());
  TPoly prev(Scalar(1));
  long r = 0;
  std::vector<long> row_of(rows);
  for (long i = 0; i < rows; ++i) row_of[i] = i;
  for (long col = 0; col < cols && r < rows; ++col) {
    long piv = -1;
    for (long i = r; i < rows; ++i)
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    // Bareiss step: entries stay in Q[t], divisions exact
    for (long i = r + 1; i < rows; ++i) {
      for (long j = col + 1; j < cols; ++j) {
        TPoly num = m[i][j] * m[r][col] - m[i][col] * m[r][j];
        m[i][j] = num.div_exact(prev);
      }
      m[i][col] = TPoly();
    }
    prev = m[r][col];
    ++r;
  }
  out.rank = r;
  out.minor = prev;  // the r x r leading minor of the pivot submatrix
  return out;
}

}  // namespace qloop
