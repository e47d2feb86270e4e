#include "doctest.h"
#include "qloop/drinfeld.hpp"
#include "qloop/selfext.hpp"
#include "qloop/sl2eval.hpp"

using namespace qloop;

TEST_CASE("the graded twist satisfies the presentation") {
  for (long qi : {2, 3}) {
    QParam q{Scalar(qi)};
    for (long m = 0; m <= 3; ++m) {
      Module e = graded_twist(eval_module(m, Scalar(1), q));
      CHECK(verify_presentation(e).pass);
    }
    Module t = tensor(eval_module(1, Scalar(1), q), eval_module(1, Scalar(2), q));
    CHECK(verify_presentation(graded_twist(t)).pass);
  }
}

TEST_CASE("twisting the trivial module splits") {
  QParam q(Scalar(2));
  Module e = graded_twist(trivial_module(q));
  CHECK(e.e0.is_zero());
  CHECK(e.f0.is_zero());
}

TEST_CASE("self-extensions of the trivial module vanish") {
  QParam q(Scalar(2));
  Module t = trivial_module(q);
  CHECK(ext1(t, t, 3).dim == 0);
}

TEST_CASE("string modules have a one-dimensional extension space") {
  for (long qi : {2, 3}) {
    QParam q{Scalar(qi)};
    for (long m = 1; m <= 3; ++m) {
      Module v = eval_module(m, Scalar(1), q);
      ExtSpace ext = ext1(v, v, 3);
      CHECK_MESSAGE(ext.dim == 1, v.label, " dim=", ext.dim, " Z=", ext.dim_Z,
                    " B=", ext.dim_B);
    }
  }
}

TEST_CASE("the twist class is nonzero and coboundary-invariant") {
  QParam q(Scalar(2));
  Module v = eval_module(2, Scalar(1), q);
  ExtSpace ext = ext1(v, v, 3);
  REQUIRE(ext.dim == 1);
  Module e = graded_twist(v);
  QVec coords = class_of(e, v, ext);
  REQUIRE(coords.size() == 1);
  CHECK(coords[0] != 0);

  // the split extension has the zero class
  Cocycle zero;
  zero.de1 = QMat(v.dim, v.dim);
  zero.df1 = QMat(v.dim, v.dim);
  zero.de0 = QMat(v.dim, v.dim);
  zero.df0 = QMat(v.dim, v.dim);
  Module split = extension_from_cocycle(v, v, zero, "split");
  CHECK(is_zero(class_of(split, v, ext)));

  // perturbing by a coboundary does not move the class
  QMat n(v.dim, v.dim);
  n.at(0, 0) = Scalar(3, 7);
  n.at(1, 1) = Scalar(-2);
  Cocycle pert;
  pert.de1 = e.e1;  // start from the twist blocks
  pert.df1 = e.f1;
  pert.de0 = e.e0;
  pert.df0 = e.f0;
  // extract off-diagonal blocks of the twist and add g n - n g
  auto block = [&](const QMat& big) {
    QMat b(v.dim, v.dim);
    for (long i = 0; i < v.dim; ++i)
      for (long j = 0; j < v.dim; ++j) b.at(i, j) = big.at(i, v.dim + j);
    return b;
  };
  Cocycle shifted;
  shifted.de1 = block(e.e1) + commutator(v.e1, n);
  shifted.df1 = block(e.f1) + commutator(v.f1, n);
  shifted.de0 = block(e.e0) + commutator(v.e0, n);
  shifted.df0 = block(e.f0) + commutator(v.f0, n);
  Module e2 = extension_from_cocycle(v, v, shifted, "perturbed");
  CHECK(verify_presentation(e2).pass);
  CHECK(class_of(e2, v, ext) == coords);
}

TEST_CASE("extensions built from cocycle representatives are modules") {
  QParam q(Scalar(2));
  Module v = eval_module(2, Scalar(1), q);
  ExtSpace ext = ext1(v, v, 3);
  for (const auto& c : ext.basis) {
    Module e = extension_from_cocycle(v, v, c, "rep");
    CHECK(verify_presentation(e).pass);
  }
}

TEST_CASE("the window parameter does not move the dimension") {
  QParam q(Scalar(2));
  Module v = eval_module(2, Scalar(1), q);
  CHECK(ext1(v, v, 3).dim == ext1(v, v, 4).dim);
}

TEST_CASE("tensor squares have extension dimension at least two") {
  QParam q(Scalar(2));
  Module v = eval_module(1, Scalar(1), q);
  Module vv = tensor(v, v);
  ExtSpace ext = ext1(vv, vv, 3);
  CHECK(ext.dim >= 2);
}

TEST_CASE("extension dimension does not drop across a simple tensor factor") {
  QParam q(Scalar(2));
  std::vector<std::pair<Module, Module>> pairs = {
      {eval_module(1, Scalar(1), q), eval_module(1, Scalar(16), q)},
      {eval_module(2, Scalar(1), q), eval_module(1, Scalar(64), q)},
  };
  for (auto& [v1, v2] : pairs) {
    Module t = tensor(v1, v2);
    REQUIRE(is_simple(t, 3).is_simple());
    CHECK(ext1(t, t, 3).dim >= ext1(v1, v1, 3).dim);
  }
}

TEST_CASE("string decomposition groups ladder roots") {
  QParam q(Scalar(2));
  auto one = string_decomposition(qstring(3, Scalar(2), q), q);
  REQUIRE(one.size() == 1);
  CHECK(one[0].first == 3);
  CHECK(one[0].second == 2);

  auto sq = string_decomposition(dpoly_pow(qstring(2, Scalar(1), q), 2), q);
  REQUIRE(sq.size() == 2);
  CHECK(sq[0] == sq[1]);
  CHECK(sq[0].first == 2);

  auto far = string_decomposition(
      multiply(qstring(1, Scalar(1), q), qstring(1, Scalar(16), q)), q);
  CHECK(far.size() == 2);

  // adjacent roots merge into one longer string
  auto merged = string_decomposition(
      multiply(qstring(1, Scalar(1), q), qstring(1, Scalar(4), q)), q);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].first == 2);
  CHECK(merged[0].second == 2);
}

TEST_CASE("factorization analysis on a prime string") {
  QParam q(Scalar(2));
  auto rep = theorem1_part2_analysis(qstring(2, Scalar(1), q), q);
  CHECK(rep.simple.is_simple());
  CHECK(rep.ext_dim == 1);
  CHECK(rep.applicable);
  CHECK(rep.s == 1);
  CHECK(rep.pi0_single_string);
  CHECK(rep.factorization_confirmed);
}

TEST_CASE("factorization analysis on a square reports inapplicable") {
  QParam q(Scalar(2));
  auto rep = theorem1_part2_analysis(dpoly_pow(qstring(1, Scalar(1), q), 2), q);
  CHECK(rep.simple.is_simple());
  CHECK(rep.ext_dim >= 2);
  CHECK(!rep.applicable);
  CHECK(rep.s == 2);
}

TEST_CASE("factorization analysis on distinct distant strings") {
  QParam q(Scalar(2));
  auto rep = theorem1_part2_analysis(
      multiply(qstring(1, Scalar(1), q), qstring(1, Scalar(16), q)), q);
  CHECK(rep.simple.is_simple());
  CHECK(rep.ext_dim >= 2);
  CHECK(!rep.applicable);
  CHECK(rep.s == 1);
  CHECK(!rep.pi0_single_string);
}

TEST_CASE("the forcing system pins the diagonal line") {
  QParam q(Scalar(2));
  CHECK(walkprop_forcing_check(2, -1, q));
  CHECK(walkprop_forcing_check(3, -1, q));
  CHECK(walkprop_forcing_check(3, -2, q));
  QParam q3(Scalar(3));
  CHECK(walkprop_forcing_check(2, -1, q3));
  // degenerate case m = -a: still compute honestly
  bool deg = walkprop_forcing_check(2, -2, q);
  CHECK((deg == true || deg == false));
}

TEST_CASE("extensions between distinct simples: frozen values") {
  QParam q(Scalar(2));
  Module triv = trivial_module(q);
  Module v11 = eval_module(1, Scalar(1), q);
  // no weight-compatible blocks at all: the spaces vanish
  CHECK(ext1(triv, v11, 3).dim == 0);
  CHECK(ext1(v11, triv, 3).dim == 0);
  CHECK(ext1(v11, eval_module(1, Scalar(16), q), 3).dim == 0);
  // the adjacent-string tensor realizes a nonsplit extension of the
  // trivial module by the three-dimensional simple with roots {1, 4}
  Module v22 = eval_module(2, Scalar(2), q);
  ExtSpace up = ext1(triv, v22, 3);
  CHECK(up.dim == 1);
  CHECK(ext1(v22, triv, 3).dim == 1);
  // building the extension from the representative gives a genuine module
  // with a single highest line (the defining mark of a nonsplit extension)
  Module e = extension_from_cocycle(triv, v22, up.basis[0], "nonsplit");
  CHECK(verify_presentation(e).pass);
  HwAnalysis hw = highest_lweight_vectors(e, 3);
  REQUIRE(hw.complete);
  CHECK(hw.hw_vector_dim() == 1);
}
