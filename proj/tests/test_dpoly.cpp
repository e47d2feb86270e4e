#include "doctest.h"
#include "qloop/dpoly.hpp"

#include <random>

using namespace qloop;

namespace {
Scalar S(const char* s) { return scalar_from_string(s); }
}

TEST_CASE("q-strings expand to the expected polynomials") {
  QParam q(Scalar(2));
  CHECK(qstring(0, Scalar(1), q).trivial());
  CHECK(qstring(1, Scalar(1), q).expand() == Coeffs{Scalar(1), Scalar(-1)});
  // (1-2u)(1-u/2) = 1 - 5/2 u + u^2
  CHECK(qstring(2, Scalar(1), q).expand() ==
        Coeffs{Scalar(1), S("-5/2"), Scalar(1)});
  CHECK_THROWS_AS(qstring(2, Scalar(0), q), std::invalid_argument);
}

TEST_CASE("multiplication merges root multisets") {
  QParam q(Scalar(2));
  DrinfeldPoly a = qstring(1, Scalar(1), q);
  CHECK(multiply(a, DrinfeldPoly()) == a);
  DrinfeldPoly sq = multiply(a, a);
  REQUIRE(sq.roots().size() == 1);
  CHECK(sq.roots()[0].second == 2);
  // str(1,1)*str(1,4) has the same roots as str(2,2)
  DrinfeldPoly prod = multiply(qstring(1, Scalar(1), q), qstring(1, Scalar(4), q));
  CHECK(prod == qstring(2, Scalar(2), q));
  CHECK(prod.degree() == 2);
}

TEST_CASE("multiplication is commutative and associative") {
  QParam q(Scalar(3));
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> pick(1, 6);
  for (int trial = 0; trial < 10; ++trial) {
    DrinfeldPoly x = qstring(pick(rng) % 3 + 1, Scalar(pick(rng)), q);
    DrinfeldPoly y = qstring(pick(rng) % 2 + 1, Scalar(pick(rng)), q);
    DrinfeldPoly z = DrinfeldPoly::from_roots({{Scalar(pick(rng)), pick(rng)}});
    CHECK(multiply(x, y) == multiply(y, x));
    CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
  }
}

TEST_CASE("eigenvalue data of a single linear factor") {
  QParam q(Scalar(2));
  for (long an : {1, 3}) {
    Scalar a(an);
    LWeightData lw = lweight_data(DrinfeldPoly::from_roots({{a, 1}}), q, 4);
    for (long r = 1; r <= 4; ++r) {
      CHECK(lw.h.at(r) == q_int(r, q) / Scalar(r) * scalar_pow(a, r));
      CHECK(lw.h.at(-r) == q_int(r, q) / Scalar(r) * scalar_pow(a, -r));
    }
  }
}

TEST_CASE("phi expansion of 1 - u at q = 2") {
  QParam q(Scalar(2));
  LWeightData lw = lweight_data(qstring(1, Scalar(1), q), q, 3);
  // coefficient of u in 2(1 - u/2)/(1 - 2u), cross-checked against
  // (q - q^-1)(a q)[1]
  CHECK(lw.phi_plus.at(1) == 3);
  CHECK(lw.phi_plus.at(1) == (q.pow(1) - q.pow(-1)) * Scalar(2) * q_int(1, q));
  CHECK(lw.phi_plus.at(0) == 2);
  CHECK(lw.phi_minus.at(0) == S("1/2"));
}

TEST_CASE("trivial element has vanishing data") {
  QParam q(Scalar(2));
  LWeightData lw = lweight_data(DrinfeldPoly(), q, 3);
  for (auto& [r, v] : lw.h) CHECK(v == 0);
  for (auto& [r, v] : lw.lambda) CHECK(v == (r == 0 ? Scalar(1) : Scalar(0)));
  for (auto& [m, v] : lw.phi_plus) CHECK(v == (m == 0 ? Scalar(1) : Scalar(0)));
}

TEST_CASE("the three derivations of the eigenvalue data agree") {
  // exp(-sum h_r/[r] u^r) must reproduce the polynomial coefficients on
  // both sides, and the phi series must match the coefficient quotients,
  // across every polynomial of degree <= 4 with roots in {q^k : |k| <= 3}
  for (long qi : {2, 3}) {
    QParam q{Scalar(qi)};
    std::vector<DrinfeldPoly> pis;
    pis.push_back(qstring(1, Scalar(1), q));
    pis.push_back(qstring(2, Scalar(1), q));
    pis.push_back(qstring(3, q.pow(-1), q));
    pis.push_back(dpoly_pow(qstring(1, q.pow(2), q), 3));
    pis.push_back(multiply(qstring(2, Scalar(1), q), qstring(2, q.pow(3), q)));
    pis.push_back(DrinfeldPoly::from_roots({{q.pow(-3), 2}, {q.pow(1), 2}}));
    for (const auto& pi : pis) {
      long R = 2 * pi.degree() + 2;
      LWeightData lw = lweight_data(pi, q, R);

      std::map<long, Scalar> up, down;
      for (long r = 1; r <= R; ++r) {
        up[r] = -lw.h.at(r) / q_int(r, q);
        down[r] = -lw.h.at(-r) / q_int(r, q);
      }
      Coeffs plus = truncated_exp_series(up, R);
      Coeffs minus = truncated_exp_series(down, R);
      for (long r = 0; r <= R; ++r) {
        CHECK(plus[r] == lw.lambda.at(r));
        if (r > 0) CHECK(minus[r] == lw.lambda.at(-r));
      }

      // phi series from the exponential of the h data
      const Scalar denom = q.pow(1) - q.pow(-1);
      std::map<long, Scalar> eh;
      for (long r = 1; r <= R; ++r) eh[r] = denom * lw.h.at(r);
      Coeffs expphi = truncated_exp_series(eh, R);
      for (long r = 0; r <= R; ++r)
        CHECK(q.pow(pi.degree()) * expphi[r] == lw.phi_plus.at(r));
      std::map<long, Scalar> ehm;
      for (long r = 1; r <= R; ++r) ehm[r] = -denom * lw.h.at(-r);
      Coeffs expphim = truncated_exp_series(ehm, R);
      for (long r = 0; r <= R; ++r)
        CHECK(q.pow(-pi.degree()) * expphim[r] == lw.phi_minus.at(-r));
    }
  }
}

TEST_CASE("primitive roots") {
  QParam q(Scalar(2));
  DrinfeldPoly sq = dpoly_pow(qstring(1, Scalar(1), q), 2);
  auto [base, s] = primitive_root(sq);
  CHECK(base == qstring(1, Scalar(1), q));
  CHECK(s == 2);

  auto [self, one] = primitive_root(qstring(2, Scalar(1), q));
  CHECK(one == 1);
  CHECK(self == qstring(2, Scalar(1), q));

  DrinfeldPoly mixed = DrinfeldPoly::from_roots({{Scalar(1), 2}, {Scalar(3), 4}});
  auto [m0, g] = primitive_root(mixed);
  CHECK(g == 2);
  CHECK(m0 == DrinfeldPoly::from_roots({{Scalar(1), 1}, {Scalar(3), 2}}));

  CHECK_THROWS_AS(primitive_root(DrinfeldPoly()), std::invalid_argument);
}

TEST_CASE("primitive root of a power recovers the exponent") {
  QParam q(Scalar(2));
  DrinfeldPoly pi0 = multiply(qstring(1, Scalar(1), q), qstring(2, Scalar(8), q));
  REQUIRE(primitive_root(pi0).second == 1);
  for (long s = 1; s <= 3; ++s) {
    auto [base, got] = primitive_root(dpoly_pow(pi0, s));
    CHECK(base == pi0);
    CHECK(got == s);
  }
}

TEST_CASE("h-proportionality") {
  QParam q(Scalar(2));
  DrinfeldPoly a = qstring(1, Scalar(1), q);
  CHECK(*proportional_h(a, a, q) == 1);
  CHECK(*proportional_h(a, dpoly_pow(a, 2), q) == Scalar(1, 2));
  for (long n = 1; n <= 4; ++n)
    CHECK(*proportional_h(a, dpoly_pow(a, n), q) == Scalar(1, n));
  CHECK(!proportional_h(a, qstring(1, Scalar(3), q), q).has_value());
  // same roots, non-proportional multiplicities
  DrinfeldPoly x = DrinfeldPoly::from_roots({{Scalar(1), 1}, {Scalar(3), 2}});
  DrinfeldPoly y = DrinfeldPoly::from_roots({{Scalar(1), 2}, {Scalar(3), 2}});
  CHECK(!proportional_h(x, y, q).has_value());
  // proportionality certifies a common power: pi1^{d'} = pi2^{d}
  DrinfeldPoly p1 = dpoly_pow(x, 2), p2 = dpoly_pow(x, 3);
  auto c = proportional_h(p1, p2, q);
  REQUIRE(c.has_value());
  CHECK(*c == Scalar(2, 3));
  CHECK(dpoly_pow(p1, 3) == dpoly_pow(p2, 2));
}

TEST_CASE("expression parser") {
  QParam q(Scalar(2));
  DrinfeldPoly p = parse_dpoly("str(2,1)*root(3,2)", q);
  CHECK(p == multiply(qstring(2, Scalar(1), q),
                      DrinfeldPoly::from_roots({{Scalar(3), 2}})));
  CHECK(parse_dpoly("str(1,-1/2)", q) ==
        DrinfeldPoly::from_roots({{S("-1/2"), 1}}));
  CHECK_THROWS_AS(parse_dpoly("str(2)", q), std::invalid_argument);
  CHECK_THROWS_AS(parse_dpoly("frob(1,1)", q), std::invalid_argument);
  CHECK_THROWS_AS(parse_dpoly("str(1,1)*", q), std::invalid_argument);
}
