#include "qloop/weylalg.hpp"

#include <algorithm>

#include "qloop/selfext.hpp"
#include "qloop/sl2eval.hpp"
#include "qloop/tpoly.hpp"

namespace qloop {

ALambdaAlgebra::ALambdaAlgebra(long lambda, const QParam& q)
    : lambda_(lambda), q_(q) {
  if (lambda < 0) throw std::invalid_argument("lambda must be nonnegative");
}

ALambdaAlgebra::Element ALambdaAlgebra::one() const {
  return {{Monomial(lambda_, 0), Scalar(1)}};
}

ALambdaAlgebra::Element ALambdaAlgebra::generator(long r) const {
  if (r == 0) return one();
  if (r > lambda_ || r < -lambda_) return zero();
  Monomial m(lambda_, 0);
  if (r > 0) {
    m[r - 1] = 1;
  } else {
    // L_{-s} = L_{lambda-s} L_lambda^{-1}
    long s = -r;
    if (lambda_ - s > 0) m[lambda_ - s - 1] += 1;
    m[lambda_ - 1] -= 1;
  }
  return {{m, Scalar(1)}};
}

ALambdaAlgebra::Element ALambdaAlgebra::mul(const Element& x,
                                            const Element& y) const {
  Element r;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      Monomial m(lambda_, 0);
      for (long i = 0; i < lambda_; ++i) m[i] = mx[i] + my[i];
      Scalar c = cx * cy;
      auto it = r.find(m);
      if (it == r.end())
        r[m] = c;
      else {
        it->second += c;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

ALambdaAlgebra::Element ALambdaAlgebra::add(const Element& x,
                                            const Element& y) const {
  Element r = x;
  for (const auto& [m, c] : y) {
    auto it = r.find(m);
    if (it == r.end())
      r[m] = c;
    else {
      it->second += c;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

ALambdaAlgebra::Element ALambdaAlgebra::word(
    const std::vector<long>& indices) const {
  Element r = one();
  for (long i : indices) r = mul(r, generator(i));
  return r;
}

ALambdaModule evaluation_character(const DrinfeldPoly& pi, long lambda) {
  if (pi.degree() != lambda)
    throw std::invalid_argument("degree of pi must equal lambda");
  ALambdaModule m;
  m.lambda = lambda;
  m.dim = 1;
  m.label = "char(" + pi.to_string() + ")";
  Coeffs c = pi.expand();
  for (long r = 1; r <= lambda; ++r) {
    QMat a(1, 1);
    a.at(0, 0) = c[r];
    m.action.push_back(a);
  }
  return m;
}

IdealQuotientResult ideal_I_quotient(long m, const Scalar& a, const QParam& q) {
  if (m < 1) throw std::invalid_argument("need m >= 1");
  if (a == 0) throw std::invalid_argument("a must be nonzero");
  const long lambda = 2 * m;
  IdealQuotientResult out;
  out.eigenvalue = -Scalar(2) * a * q_int(m, q);
  const Scalar c = -out.eigenvalue;  // L_1 + c generates the square

  // the squared string and its coefficients
  DrinfeldPoly pi = dpoly_pow(qstring(m, a, q), 2);
  Coeffs d = pi.expand();
  out.point.assign(d.begin(), d.end());

  // middle coefficient of the recurrence at L_1 = x
  auto mid = [&](long r) {
    TPoly t;
    t.c = {Scalar(2) * a * q.pow(m) * q_int(r + 1, q), q.pow(r + 1)};
    t.normalize();
    return t;  // q^{r+1} x + 2 a q^m [r+1]
  };

  // membership: every instance of the printed family, 0 <= r <= 2m,
  // vanishes at the coefficient vector of the squared string
  out.membership_ok = true;
  auto dval = [&](long r) { return r >= 0 && r <= lambda ? d[r] : Scalar(0); };
  for (long r = 0; r <= lambda; ++r) {
    Scalar inst = q_int(r + 2, q) * dval(r + 2) -
                  (q.pow(r + 1) * dval(1) + Scalar(2) * a * q.pow(m) * q_int(r + 1, q)) *
                      dval(r + 1) -
                  a * a * q_int(lambda - r, q) * dval(r);
    if (inst != 0) out.membership_ok = false;
  }
  Scalar sq = (dval(1) + Scalar(2) * a * q_int(m, q));
  if (sq * sq != 0) out.membership_ok = false;

  // eliminate: P_0 = 1, P_1 = x, [r+2] P_{r+2} = mid(r) P_{r+1} + a^2 [2m-r] P_r
  std::vector<TPoly> p(lambda + 1);
  p[0] = TPoly(Scalar(1));
  p[1] = TPoly::variable();
  for (long r = 0; r + 2 <= lambda; ++r) {
    TPoly num = mid(r) * p[r + 1] + p[r] * TPoly(a * a * q_int(lambda - r, q));
    p[r + 2] = num.div_exact(TPoly(q_int(r + 2, q)));
  }

  // quotient structure on basis {1, y} with y = x + c, y^2 = 0
  auto jordan = [&](const TPoly& poly) {
    QMat mat(2, 2);
    Scalar v = poly.eval(-c);
    mat.at(0, 0) = v;
    mat.at(1, 1) = v;
    mat.at(1, 0) = poly.derivative().eval(-c);
    return mat;
  };

  // the top generator must stay invertible in the quotient
  if (p[lambda].eval(-c) == 0)
    throw std::runtime_error("ideal quotient: top generator not invertible");

  out.codimension = 2;
  out.mod.lambda = lambda;
  out.mod.dim = 2;
  out.mod.label = "ideal-quotient(m=" + std::to_string(m) + ",a=" +
                  scalar_to_string(a) + ")";
  for (long r = 1; r <= lambda; ++r) {
    out.mod.action.push_back(jordan(p[r]));
    // the closed-point eigenvalues must reproduce the squared string
    if (p[r].eval(-c) != d[r])
      throw std::runtime_error("ideal quotient: eigenvalue mismatch");
  }
  out.non_split = false;
  for (const auto& mat : out.mod.action)
    if (mat.at(1, 0) != 0) out.non_split = true;
  if (!out.membership_ok)
    throw std::runtime_error("ideal quotient: membership check failed");
  return out;
}

namespace {

bool top_is_cyclic(const Module& w) {
  QVec top(w.dim, Scalar(0));
  top[0] = 1;
  return long(spin(w, top).size()) == w.dim;
}

Module tensor_chain(const std::vector<Scalar>& roots, const QParam& q) {
  Module w = eval_module(1, roots[0], q);
  for (size_t i = 1; i < roots.size(); ++i)
    w = tensor(w, eval_module(1, roots[i], q));
  return w;
}

}  // namespace

Module local_weyl(const DrinfeldPoly& pi, const QParam& q) {
  if (pi.trivial())
    throw std::invalid_argument("local Weyl module of the trivial element");
  std::vector<Scalar> roots;
  for (const auto& [a, p] : pi.roots())
    for (long i = 0; i < p; ++i) roots.push_back(a);

  // Preferred ordering: weakly decreasing |exponent| when every root is a
  // power of q, else weakly decreasing magnitude. Fall back to a full
  // permutation search; cyclicity is always certified by spinning.
  std::vector<std::vector<Scalar>> candidates;
  {
    auto by_exponent = roots;
    bool all_powers = true;
    std::vector<std::pair<long, Scalar>> keyed;
    for (const auto& r : roots) {
      long e;
      if (as_power_of(r, q.q, e))
        keyed.push_back({e, r});
      else
        all_powers = false;
    }
    if (all_powers) {
      std::stable_sort(keyed.begin(), keyed.end(), [](auto& x, auto& y) {
        return std::abs(x.first) > std::abs(y.first);
      });
      for (size_t i = 0; i < roots.size(); ++i) by_exponent[i] = keyed[i].second;
      candidates.push_back(by_exponent);
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](auto& x, auto& y) { return x.first > y.first; });
      for (size_t i = 0; i < roots.size(); ++i) by_exponent[i] = keyed[i].second;
      candidates.push_back(by_exponent);
    }
    auto by_mag = roots;
    std::stable_sort(by_mag.begin(), by_mag.end(),
                     [](const Scalar& x, const Scalar& y) { return abs(x) > abs(y); });
    candidates.push_back(by_mag);
  }
  for (auto& cand : candidates) {
    Module w = tensor_chain(cand, q);
    if (top_is_cyclic(w)) {
      w.label = "weyl(" + pi.to_string() + ")";
      return w;
    }
  }
  std::vector<Scalar> perm = roots;
  std::sort(perm.begin(), perm.end());
  std::string tried;
  do {
    Module w = tensor_chain(perm, q);
    if (top_is_cyclic(w)) {
      w.label = "weyl(" + pi.to_string() + ")";
      return w;
    }
    tried += " [";
    for (const auto& r : perm) tried += scalar_to_string(r) + " ";
    tried += "]";
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw std::runtime_error("no ordering makes the top vector cyclic; tried" +
                           tried);
}

std::pair<long, long> ext_weyl_dimension_check(const DrinfeldPoly& pi,
                                               const QParam& q) {
  Module w = local_weyl(pi, q);
  ExtSpace ext = ext1(w, w, default_window(w));
  return {ext.dim, pi.degree()};
}

}  // namespace qloop
