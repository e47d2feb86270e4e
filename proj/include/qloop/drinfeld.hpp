#pragma once

#include <map>

#include "qloop/module.hpp"

namespace qloop {

/// Action matrices of the loop-graded generators recovered from the four
/// Chevalley matrices, on the window |r| <= R. Verified against the full
/// graded relation set on construction.
struct DrinfeldMatrices {
  long R = 0;
  std::map<long, QMat> xplus;     // |r| <= R
  std::map<long, QMat> xminus;    // |r| <= R
  std::map<long, QMat> h;         // 0 < |s| <= R
  std::map<long, QMat> phi_plus;  // 0 <= m <= R
  std::map<long, QMat> phi_minus; // -R <= m <= 0
};

long default_window(const Module& v);

/// Recovery: x+_0, x-_0 are the degree-0 pair; x-_1 and x+_{-1} come from
/// the affine pair; the degree ±1 diagonal generators bootstrap the rest of
/// the window through the mixed commutation relations. Throws if any graded
/// relation leaves a nonzero residual.
DrinfeldMatrices drinfeld_matrices(const Module& v, long R);

struct HwSubspace {
  long weight = 0;
  std::vector<QVec> eigen_basis;      // joint eigenvectors
  std::map<long, Scalar> h_eigen;     // s -> eigenvalue
  bool semisimple = true;             // false: generalized block is bigger
  long block_dim = 0;
};

struct HwAnalysis {
  std::vector<HwSubspace> spaces;
  bool complete = true;   // false when a spectrum fails to split rationally
  std::string note;

  /// Dimension of the space of joint eigenvectors among the raising kernel.
  long hw_vector_dim() const;
};

/// Joint kernel of the raising generators on the window, decomposed into
/// joint eigenspaces of the commuting diagonal generators.
HwAnalysis highest_lweight_vectors(const Module& v, long R);
HwAnalysis highest_lweight_vectors(const Module& v, const DrinfeldMatrices& dm);

}  // namespace qloop
