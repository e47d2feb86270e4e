#pragma once

#include <optional>

#include "qloop/dpoly.hpp"
#include "qloop/module.hpp"
#include "qloop/simplicity.hpp"

namespace qloop {

/// The graded self-extension on V + V: a homogeneous element of loop
/// degree d acts by [[g, d g], [0, g]] in sub-first block order.
Module graded_twist(const Module& v);

/// A single derivation cocycle: off-diagonal blocks for the four
/// generators, each a weight-homogeneous map V -> W.
struct Cocycle {
  QMat de1, df1, de0, df0;
  const QMat& block(int g) const;
};

/// Space of extensions of V by W: solutions of the linearized defining
/// relations in the four off-diagonal blocks, modulo the inner coboundaries
/// coming from weight-preserving maps V -> W. Dimensions are exact ranks.
struct ExtSpace {
  long dim = 0;    // dim Z - dim B
  long dim_Z = 0;  // cocycles
  long dim_B = 0;  // coboundaries
  std::vector<Cocycle> basis;  // representatives of a basis mod coboundaries
  std::string metadata;

  // bookkeeping for expressing cocycles in coordinates
  std::vector<std::tuple<int, long, long>> columns;  // (generator, row, col)
  std::vector<QVec> rep_vecs;
  std::vector<QVec> coboundary_vecs;
  long vdim = 0, wdim = 0;
};

/// Extensions 0 -> W -> E -> V -> 0 inside the type-1 category (the
/// Cartan block is diagonal, so its off-diagonal derivative vanishes and
/// the four unknown blocks are weight-homogeneous). The window parameter is
/// recorded but the computation runs over the finite presentation, so the
/// result is window-independent.
ExtSpace ext1(const Module& v, const Module& w, long R);

/// Builds the block-upper-triangular module W + V defined by a cocycle.
Module extension_from_cocycle(const Module& v, const Module& w,
                              const Cocycle& c, const std::string& label);

/// Extracts the off-diagonal blocks of a block-triangular self-extension
/// and returns its coordinates in the basis of `ext`, modulo coboundaries.
QVec class_of(const Module& v_ext, const Module& v, const ExtSpace& ext);

struct Theorem1Part2Report {
  DrinfeldPoly pi;
  std::vector<std::pair<long, Scalar>> strings;  // (length, center) factors
  SimplicityResult simple;
  long ext_dim = -1;
  bool applicable = false;       // ext_dim == 1
  DrinfeldPoly pi0;
  long s = 0;
  bool pi0_single_string = false;
  bool factorization_confirmed = false;  // when applicable: pi = pi0^s and
                                         // pi0 is a single string
  std::string note;
  std::string summary() const;
};

/// Builds the simple module attached to pi as a tensor of string modules,
/// certifies simplicity, computes the self-extension dimension, and checks
/// the power factorization against the primitive root when the dimension
/// is one.
Theorem1Part2Report theorem1_part2_analysis(const DrinfeldPoly& pi,
                                            const QParam& q);

/// Greedy maximal-chain decomposition of the root multiset into strings;
/// returns (length, center) pairs.
std::vector<std::pair<long, Scalar>> string_decomposition(
    const DrinfeldPoly& pi, const QParam& q);

/// The three-unknown linear system forcing the boundary scalars to agree:
///   -z1 [r a] q^{r(a-m)} + zn [r m] = z' q^{r a} [r(m-a)],  r = 1, 2, 3.
/// True iff the solution space is exactly the diagonal line z1 = zn = z'.
bool walkprop_forcing_check(long m, long a_cart, const QParam& q);

}  // namespace qloop
