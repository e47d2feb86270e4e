#include "qloop/qnum.hpp"

namespace qloop {

Scalar q_int(long m, const QParam& q) {
  // (q^m - q^-m)/(q - q^-1)
  return (q.pow(m) - q.pow(-m)) / (q.pow(1) - q.pow(-1));
}

Scalar q_factorial(long l, const QParam& q) {
  if (l < 0) throw std::invalid_argument("q_factorial: negative argument");
  Scalar r(1);
  for (long k = 1; k <= l; ++k) r *= q_int(k, q);
  return r;
}

Scalar q_binom(long l, long r, const QParam& q) {
  if (r < 0 || l < 0 || r > l)
    throw std::invalid_argument("q_binom: need 0 <= r <= l");
  return q_factorial(l, q) / (q_factorial(l - r, q) * q_factorial(r, q));
}

Coeffs truncated_exp_series(const std::map<long, Scalar>& coeffs, long order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  if (coeffs.count(0) && coeffs.at(0) != 0)
    throw std::invalid_argument("exp input must have no constant term");
  Coeffs c(order + 1, Scalar(0));
  for (const auto& [d, v] : coeffs) {
    if (d < 0) throw std::invalid_argument("negative degree in exp input");
    if (d != 0 && d <= order) c[d] = v;
  }
  // g' = f' g  =>  n g_n = sum_{k=1..n} k c_k g_{n-k}
  Coeffs g(order + 1, Scalar(0));
  g[0] = 1;
  for (long n = 1; n <= order; ++n) {
    Scalar acc(0);
    for (long k = 1; k <= n; ++k) acc += Scalar(k) * c[k] * g[n - k];
    g[n] = acc / Scalar(n);
  }
  return g;
}

Coeffs truncated_log_series(const Coeffs& g, long order) {
  if (g.empty() || g[0] != 1)
    throw std::invalid_argument("log input must have constant term 1");
  auto at = [&](long i) { return i < long(g.size()) ? g[i] : Scalar(0); };
  Coeffs c(order + 1, Scalar(0));
  for (long n = 1; n <= order; ++n) {
    Scalar acc = Scalar(n) * at(n);
    for (long k = 1; k < n; ++k) acc -= Scalar(k) * c[k] * at(n - k);
    c[n] = acc / Scalar(n);
  }
  return c;
}

Coeffs series_mul(const Coeffs& a, const Coeffs& b, long order) {
  Coeffs r(order + 1, Scalar(0));
  for (long i = 0; i < long(a.size()) && i <= order; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; j < long(b.size()) && i + j <= order; ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}

Coeffs series_div(const Coeffs& a, const Coeffs& b, long order) {
  if (b.empty() || b[0] == 0)
    throw std::invalid_argument("series division by series with zero constant term");
  auto av = [&](long i) { return i < long(a.size()) ? a[i] : Scalar(0); };
  auto bv = [&](long i) { return i < long(b.size()) ? b[i] : Scalar(0); };
  Coeffs r(order + 1, Scalar(0));
  for (long n = 0; n <= order; ++n) {
    Scalar acc = av(n);
    for (long k = 0; k < n; ++k) acc -= r[k] * bv(n - k);
    r[n] = acc / b[0];
  }
  return r;
}

}  // namespace qloop
