#pragma once

#include <string>
#include <vector>

#include "qloop/matrix.hpp"
#include "qloop/qnum.hpp"
#include "qloop/scalar.hpp"

namespace qloop {

/// Finite-dimensional weight-graded module with exact action matrices for
/// the four loop Chevalley generators. The Cartan element acts diagonally
/// with eigenvalue q^{weights[j]} on basis vector j, and the affine one is
/// its inverse.
struct Module {
  long dim;
  QParam q;
  std::vector<long> weights;
  QMat e1, f1, e0, f0;
  std::string label;

  Module(long d, const QParam& qq)
      : dim(d),
        q(qq),
        weights(d, 0),
        e1(d, d),
        f1(d, d),
        e0(d, d),
        f0(d, d) {}

  QMat k_matrix() const;
  QMat k_inverse() const;
  const QMat& action(int generator) const;  // 0:e1 1:f1 2:e0 3:f0
  long top_weight() const;
};

/// Weight shift of each generator, indexed as in Module::action.
constexpr long kGeneratorShift[4] = {+2, -2, -2, +2};

Module trivial_module(const QParam& q);

struct RelationReport {
  struct Item {
    std::string name;
    bool ok;
    Scalar max_residual;
  };
  std::vector<Item> items;
  bool pass = true;
  std::string summary() const;
};

/// Evaluates every defining relation of the presentation as a residual
/// matrix; passes iff all residuals are exactly zero.
RelationReport verify_presentation(const Module& v);

/// Tensor product along the coproduct; weights add, dims multiply.
Module tensor(const Module& v, const Module& w);

/// Dual module via the antipode; weights negate.
Module dual(const Module& v);

Module direct_sum(const Module& v, const Module& w);

/// Smallest subspace containing v and closed under the four generator
/// matrices, returned as a reduced echelon basis.
std::vector<QVec> spin(const Module& v, const QVec& vec);

}  // namespace qloop
