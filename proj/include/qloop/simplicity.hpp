#pragma once

#include "qloop/drinfeld.hpp"
#include "qloop/module.hpp"

namespace qloop {

enum class Simplicity { Simple, NotSimple, Undecided };

struct SimplicityResult {
  Simplicity verdict = Simplicity::Undecided;
  QVec certificate;  // a non-generating vector when NotSimple
  std::string note;

  bool is_simple() const { return verdict == Simplicity::Simple; }
};

/// Every nonzero submodule contains a joint eigenvector of the diagonal
/// generators inside the raising kernel, so the module is simple iff every
/// such vector generates everything. One-dimensional joint eigenspaces are
/// spun directly; a two-dimensional eigenspace is decided exactly through
/// the pencil v1 + t v2 over the rationals extended by one indeterminate
/// (generic rank plus specialization checks at the rational roots of a
/// witness minor, plus the point at infinity). Larger eigenspaces and
/// non-rational spectra are reported as undecided, never guessed.
SimplicityResult is_simple(const Module& v, long R);

/// Basis of the unital matrix algebra generated by the four action
/// matrices (used by the pencil test; spin(v) = span of basis * v).
std::vector<QMat> algebra_basis(const Module& v);

}  // namespace qloop
