#include <set>

#include "doctest.h"
#include "qloop/module.hpp"
#include "qloop/sl2eval.hpp"

using namespace qloop;

TEST_CASE("the trivial module satisfies the presentation") {
  QParam q(Scalar(2));
  CHECK(verify_presentation(trivial_module(q)).pass);
}

TEST_CASE("evaluation modules satisfy the presentation exactly") {
  for (long qi : {2, 3}) {
    QParam q{Scalar(qi)};
    for (long m = 1; m <= 3; ++m)
      for (long a : {1, 2}) {
        Module v = eval_module(m, Scalar(a), q);
        RelationReport rep = verify_presentation(v);
        CHECK_MESSAGE(rep.pass, v.label, ": ", rep.summary());
      }
  }
}

TEST_CASE("a perturbed module fails the bracket relation") {
  QParam q(Scalar(2));
  Module v = eval_module(1, Scalar(1), q);
  v.e0 = v.e0 * Scalar(2);
  RelationReport rep = verify_presentation(v);
  CHECK(!rep.pass);
  bool found = false;
  for (const auto& it : rep.items)
    if (it.name.find("[e0,f0]") != std::string::npos && !it.ok) found = true;
  CHECK(found);
}

TEST_CASE("tensor bookkeeping: dimensions and weights") {
  QParam q(Scalar(2));
  Module t = tensor(eval_module(1, Scalar(1), q), eval_module(1, Scalar(4), q));
  CHECK(t.dim == 4);
  std::multiset<long> got(t.weights.begin(), t.weights.end());
  CHECK(got == std::multiset<long>{2, 0, 0, -2});
  CHECK(verify_presentation(t).pass);
}

TEST_CASE("tensor with the trivial module is the identity") {
  QParam q(Scalar(2));
  Module v = eval_module(2, Scalar(1), q);
  Module t = tensor(v, trivial_module(q));
  CHECK(t.dim == v.dim);
  for (int g = 0; g < 4; ++g) CHECK(t.action(g) == v.action(g));
  Module t2 = tensor(trivial_module(q), v);
  for (int g = 0; g < 4; ++g) CHECK(t2.action(g) == v.action(g));
}

TEST_CASE("tensor is associative under index flattening") {
  QParam q(Scalar(2));
  Module a = eval_module(1, Scalar(1), q);
  Module b = eval_module(1, Scalar(4), q);
  Module c = eval_module(1, Scalar(3), q);
  Module left = tensor(tensor(a, b), c);
  Module right = tensor(a, tensor(b, c));
  CHECK(left.weights == right.weights);
  for (int g = 0; g < 4; ++g) CHECK(left.action(g) == right.action(g));
}

TEST_CASE("tensors of valid modules satisfy the presentation") {
  QParam q(Scalar(3));
  Module t = tensor(eval_module(2, Scalar(1), q), eval_module(1, Scalar(2), q));
  CHECK(verify_presentation(t).pass);
}

TEST_CASE("duals: weights negate, presentation holds, double dual conjugate") {
  QParam q(Scalar(2));
  Module v = eval_module(2, Scalar(1), q);
  Module d = dual(v);
  CHECK(d.dim == v.dim);
  std::multiset<long> neg;
  for (long w : v.weights) neg.insert(-w);
  CHECK(std::multiset<long>(d.weights.begin(), d.weights.end()) == neg);
  CHECK(verify_presentation(d).pass);

  Module dd = dual(d);
  CHECK(dd.weights == v.weights);
  // the antipode squares to conjugation by the Cartan element
  QMat k = v.k_matrix(), ki = v.k_inverse();
  for (int g = 0; g < 4; ++g) {
    bool by_k = dd.action(g) == k * v.action(g) * ki;
    bool by_ki = dd.action(g) == ki * v.action(g) * k;
    CHECK((by_k || by_ki));
  }
  CHECK(verify_presentation(dual(trivial_module(q))).pass);
}

TEST_CASE("spin of the top vector fills a string module") {
  QParam q(Scalar(2));
  Module v = eval_module(3, Scalar(1), q);
  QVec top(v.dim, Scalar(0));
  top[0] = 1;
  CHECK(spin(v, top).size() == 4);
  // scale invariance
  CHECK(spin(v, scale(top, Scalar(7, 3))).size() == 4);
  // any nonzero vector of a simple module generates
  QVec mix(v.dim, Scalar(0));
  mix[1] = Scalar(2);
  mix[3] = Scalar(-1, 5);
  CHECK(spin(v, mix).size() == 4);
  CHECK_THROWS_AS(spin(v, QVec(v.dim, Scalar(0))), std::invalid_argument);
}

TEST_CASE("spin dimension never exceeds the ambient dimension") {
  QParam q(Scalar(2));
  Module t = tensor(eval_module(1, Scalar(1), q), eval_module(1, Scalar(4), q));
  for (long i = 0; i < t.dim; ++i) {
    QVec e(t.dim, Scalar(0));
    e[i] = 1;
    CHECK(long(spin(t, e).size()) <= t.dim);
  }
}

TEST_CASE("direct sums satisfy the presentation") {
  QParam q(Scalar(2));
  Module v = eval_module(1, Scalar(1), q);
  Module s = direct_sum(v, v);
  CHECK(s.dim == 4);
  CHECK(verify_presentation(s).pass);
}
