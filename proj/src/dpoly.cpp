#include "qloop/dpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qloop {

DrinfeldPoly DrinfeldPoly::from_roots(
    std::vector<std::pair<Scalar, long>> roots) {
  std::map<Scalar, long> merged;
  for (auto& [a, p] : roots) {
    if (a == 0) throw std::invalid_argument("spectral parameter must be nonzero");
    if (p <= 0) throw std::invalid_argument("multiplicity must be positive");
    merged[a] += p;
  }
  DrinfeldPoly out;
  out.roots_.assign(merged.begin(), merged.end());
  return out;
}

long DrinfeldPoly::degree() const {
  long d = 0;
  for (const auto& [a, p] : roots_) d += p;
  return d;
}

Coeffs DrinfeldPoly::expand() const {
  Coeffs c = {Scalar(1)};
  for (const auto& [a, p] : roots_)
    for (long k = 0; k < p; ++k) {
      Coeffs next(c.size() + 1, Scalar(0));
      for (size_t i = 0; i < c.size(); ++i) {
        next[i] += c[i];
        next[i + 1] -= a * c[i];
      }
      c = std::move(next);
    }
  return c;
}

DrinfeldPoly DrinfeldPoly::reversed() const {
  std::vector<std::pair<Scalar, long>> inv;
  for (const auto& [a, p] : roots_) inv.push_back({Scalar(1) / a, p});
  return from_roots(std::move(inv));
}

std::string DrinfeldPoly::to_string() const {
  if (trivial()) return "1";
  std::string s;
  for (const auto& [a, p] : roots_) {
    if (!s.empty()) s += "*";
    s += "root(" + scalar_to_string(a) + "," + std::to_string(p) + ")";
  }
  return s;
}

DrinfeldPoly qstring(long m, const Scalar& a, const QParam& q) {
  if (a == 0) throw std::invalid_argument("qstring: a must be nonzero");
  if (m < 0) throw std::invalid_argument("qstring: m must be nonnegative");
  std::vector<std::pair<Scalar, long>> roots;
  for (long k = 0; k < m; ++k) roots.push_back({a * q.pow(m - 1 - 2 * k), 1});
  return DrinfeldPoly::from_roots(std::move(roots));
}

DrinfeldPoly multiply(const DrinfeldPoly& p1, const DrinfeldPoly& p2) {
  std::vector<std::pair<Scalar, long>> roots = p1.roots();
  for (const auto& r : p2.roots()) roots.push_back(r);
  return DrinfeldPoly::from_roots(std::move(roots));
}

DrinfeldPoly dpoly_pow(const DrinfeldPoly& p, long s) {
  if (s < 0) throw std::invalid_argument("dpoly_pow: negative exponent");
  DrinfeldPoly out;
  for (long i = 0; i < s; ++i) out = multiply(out, p);
  return out;
}

LWeightData lweight_data(const DrinfeldPoly& pi, const QParam& q, long R) {
  if (R < pi.degree())
    throw std::invalid_argument("lweight window smaller than degree");
  LWeightData out;

  // power sums: h_r = ([r]/r) sum_s p_s a_s^r, valid for r of either sign
  for (long r = -R; r <= R; ++r) {
    if (r == 0) continue;
    Scalar acc(0);
    for (const auto& [a, p] : pi.roots()) acc += Scalar(p) * scalar_pow(a, r);
    out.h[r] = q_int(r, q) / Scalar(r) * acc;
  }

  // polynomial coefficients on both sides
  Coeffs plus = pi.expand();
  Coeffs minus = pi.reversed().expand();
  for (long r = 0; r <= R; ++r) {
    out.lambda[r] = r < long(plus.size()) ? plus[r] : Scalar(0);
    if (r > 0) out.lambda[-r] = r < long(minus.size()) ? minus[r] : Scalar(0);
  }

  // Laurent expansions of q^deg pi(u/q)/pi(qu): about 0 in u, about
  // infinity in w = 1/u, where the latter equals q^-deg rev(qw)/rev(w/q).
  const long d = pi.degree();
  auto shifted = [&](const DrinfeldPoly& p, long e) {
    Coeffs c = p.expand();
    for (size_t i = 0; i < c.size(); ++i) c[i] *= q.pow(e * long(i));
    return c;
  };
  Coeffs up = series_div(shifted(pi, -1), shifted(pi, 1), R);
  for (long m = 0; m <= R; ++m) out.phi_plus[m] = q.pow(d) * up[m];
  DrinfeldPoly rev = pi.reversed();
  Coeffs down = series_div(shifted(rev, 1), shifted(rev, -1), R);
  for (long m = 0; m <= R; ++m) out.phi_minus[-m] = q.pow(-d) * down[m];
  return out;
}

long default_window(const DrinfeldPoly& pi) {
  return std::max<long>(3, 2 * pi.degree() + 2);
}

std::pair<DrinfeldPoly, long> primitive_root(const DrinfeldPoly& pi) {
  if (pi.trivial())
    throw std::invalid_argument("primitive_root of the trivial element");
  long g = 0;
  for (const auto& [a, p] : pi.roots()) g = std::gcd(g, p);
  std::vector<std::pair<Scalar, long>> base;
  for (const auto& [a, p] : pi.roots()) base.push_back({a, p / g});
  return {DrinfeldPoly::from_roots(std::move(base)), g};
}

std::optional<Scalar> proportional_h(const DrinfeldPoly& p1,
                                     const DrinfeldPoly& p2, const QParam& q) {
  (void)q;  // proportionality is decided on root data, exactly
  if (p1.trivial() || p2.trivial())
    throw std::invalid_argument("proportional_h needs nontrivial inputs");
  const auto& r1 = p1.roots();
  const auto& r2 = p2.roots();
  if (r1.size() != r2.size()) return std::nullopt;
  Scalar c(0);
  for (size_t i = 0; i < r1.size(); ++i) {
    if (r1[i].first != r2[i].first) return std::nullopt;
    Scalar ratio(r1[i].second, r2[i].second);
    ratio.canonicalize();
    if (i == 0)
      c = ratio;
    else if (ratio != c)
      return std::nullopt;
  }
  return c;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const QParam& q;

  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + msg);
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string token() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected a name");
    return s.substr(start, pos - start);
  }

  Scalar number() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() &&
           (isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    if (start == pos) fail("expected a number");
    return scalar_from_string(s.substr(start, pos - start));
  }

  long integer() {
    Scalar v = number();
    if (v.get_den() != 1) fail("expected an integer");
    if (!v.get_num().fits_slong_p()) fail("integer out of range");
    return v.get_num().get_si();
  }

  DrinfeldPoly factor() {
    std::string name = token();
    expect('(');
    DrinfeldPoly out;
    if (name == "str") {
      long m = integer();
      expect(',');
      Scalar a = number();
      out = qstring(m, a, q);
    } else if (name == "root") {
      Scalar a = number();
      expect(',');
      long p = integer();
      out = DrinfeldPoly::from_roots({{a, p}});
    } else {
      fail("unknown factor '" + name + "' (want str or root)");
    }
    expect(')');
    return out;
  }

  DrinfeldPoly product() {
    DrinfeldPoly out = factor();
    while (eat('*')) out = multiply(out, factor());
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return out;
  }
};

}  // namespace

DrinfeldPoly parse_dpoly(const std::string& expr, const QParam& q) {
  Parser p{expr, 0, q};
  return p.product();
}

}  // namespace qloop
