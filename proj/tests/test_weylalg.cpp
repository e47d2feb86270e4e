#include <algorithm>
#include <random>

#include "doctest.h"
#include "qloop/drinfeld.hpp"
#include "qloop/qnum.hpp"
#include "qloop/simplicity.hpp"
#include "qloop/weylalg.hpp"

using namespace qloop;

TEST_CASE("normal form of Laurent words") {
  QParam q(Scalar(2));
  ALambdaAlgebra alg(3, q);
  // L_3 L_{-3} = 1
  CHECK(alg.word({3, -3}) == alg.one());
  // L_3 L_{-s} = L_{3-s}
  CHECK(alg.word({3, -1}) == alg.generator(2));
  CHECK(alg.word({3, -2}) == alg.generator(1));
  // out-of-range generators vanish
  CHECK(alg.generator(4).empty());
  CHECK(alg.generator(-4).empty());

  // random words reduce consistently: appending (3, -3) never changes
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> pick(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long> w;
    for (int i = 0; i < 5; ++i) {
      long g = pick(rng);
      if (g != 0) w.push_back(g);
    }
    auto base = alg.word(w);
    w.push_back(3);
    w.push_back(-3);
    CHECK(alg.word(w) == base);
  }
}

TEST_CASE("evaluation characters read off coefficients") {
  QParam q(Scalar(2));
  ALambdaModule one = evaluation_character(qstring(1, Scalar(1), q), 1);
  CHECK(one.dim == 1);
  CHECK(one.action[0].at(0, 0) == -1);

  ALambdaModule two = evaluation_character(qstring(2, Scalar(1), q), 2);
  CHECK(two.action[0].at(0, 0) == Scalar(-5, 2));
  CHECK(two.action[1].at(0, 0) == 1);

  ALambdaModule zero = evaluation_character(DrinfeldPoly(), 0);
  CHECK(zero.dim == 1);
  CHECK(zero.action.empty());

  CHECK_THROWS_AS(evaluation_character(qstring(1, Scalar(1), q), 2),
                  std::invalid_argument);
}

TEST_CASE("rank-two quotient at the squared string") {
  for (long qi : {2, 3}) {
    QParam q{Scalar(qi)};
    for (long m = 1; m <= 3; ++m)
      for (long an : {1, 2}) {
        IdealQuotientResult r = ideal_I_quotient(m, Scalar(an), q);
        CHECK(r.codimension == 2);
        CHECK(r.membership_ok);
        CHECK(r.non_split);
        // matrices commute and the top one is invertible
        for (const auto& x : r.mod.action)
          for (const auto& y : r.mod.action)
            CHECK(commutator(x, y).is_zero());
        const QMat& top = r.mod.action.back();
        CHECK(top.at(0, 0) != 0);
        // closed-point eigenvalues are the squared-string coefficients
        for (long i = 0; i < 2 * m; ++i)
          CHECK(r.mod.action[i].at(0, 0) == r.point[i + 1]);
      }
  }
}

TEST_CASE("quotient eigenvalue pins the Jordan block location") {
  QParam q(Scalar(2));
  IdealQuotientResult r = ideal_I_quotient(1, Scalar(1), q);
  CHECK(r.eigenvalue == -2);
  CHECK(r.mod.action[0].at(0, 0) == -2);
  CHECK(r.mod.action[0].at(1, 0) == 1);
  // non-diagonalizable: (L_1 - eigenvalue) is nonzero nilpotent
  QMat shifted = r.mod.action[0];
  shifted.at(0, 0) -= r.eigenvalue;
  shifted.at(1, 1) -= r.eigenvalue;
  CHECK(!shifted.is_zero());
  CHECK((shifted * shifted).is_zero());
}

TEST_CASE("local Weyl modules: dimension, cyclicity, top eigenvalues") {
  QParam q(Scalar(2));
  std::vector<DrinfeldPoly> pis = {
      qstring(1, Scalar(3), q),
      dpoly_pow(qstring(1, Scalar(1), q), 2),
      multiply(qstring(1, Scalar(1), q), qstring(1, Scalar(4), q)),
      dpoly_pow(qstring(2, Scalar(1), q), 2),
  };
  for (const auto& pi : pis) {
    Module w = local_weyl(pi, q);
    CHECK(w.dim == (1L << pi.degree()));
    CHECK(verify_presentation(w).pass);
    // cyclic on the top vector
    QVec top(w.dim, Scalar(0));
    top[0] = 1;
    CHECK(long(spin(w, top).size()) == w.dim);
    // top eigenvalues match the product data
    const long R = std::max<long>(3, pi.degree());
    DrinfeldMatrices dm = drinfeld_matrices(w, R);
    LWeightData lw = lweight_data(pi, q, R);
    for (long r = -3; r <= 3; ++r) {
      if (r == 0) continue;
      QVec hv = dm.h.at(r).apply(top);
      CHECK(hv[0] == lw.h.at(r));
      for (long i = 1; i < w.dim; ++i) CHECK(hv[i] == 0);
    }
    // weight multiplicities are binomial
    std::map<long, long> mult;
    for (long x : w.weights) ++mult[x];
    long d = pi.degree();
    for (long k = 0; k <= d; ++k) {
      Scalar binom = q_factorial(d, q);  // placeholder to keep q unused warnings away
      (void)binom;
      long expect = 1;
      for (long t = 0; t < k; ++t) expect = expect * (d - t) / (t + 1);
      CHECK(mult[d - 2 * k] == expect);
    }
  }
}

TEST_CASE("single-factor local Weyl module is the fundamental one") {
  QParam q(Scalar(2));
  Module w = local_weyl(qstring(1, Scalar(7), q), q);
  CHECK(w.dim == 2);
  CHECK(is_simple(w, 3).is_simple());
}

TEST_CASE("adjacent-string local Weyl module is cyclic but not simple") {
  QParam q(Scalar(2));
  DrinfeldPoly pi = multiply(qstring(1, Scalar(1), q), qstring(1, Scalar(4), q));
  Module w = local_weyl(pi, q);
  CHECK(w.dim == 4);
  CHECK(is_simple(w, 3).verdict == Simplicity::NotSimple);
}

TEST_CASE("extension dimension of local Weyl modules equals the degree") {
  QParam q(Scalar(2));
  std::vector<DrinfeldPoly> pis = {
      qstring(1, Scalar(1), q),
      dpoly_pow(qstring(1, Scalar(1), q), 2),
      multiply(qstring(1, Scalar(1), q), qstring(1, Scalar(4), q)),
  };
  for (const auto& pi : pis) {
    auto [computed, expected] = ext_weyl_dimension_check(pi, q);
    CHECK(computed == expected);
    CHECK(expected == pi.degree());
  }
}
