#pragma once

#include "qloop/dpoly.hpp"
#include "qloop/module.hpp"

namespace qloop {

struct EvalModuleSpec {
  long m;
  Scalar a;
  QParam q;

  EvalModuleSpec(long mm, const Scalar& aa, const QParam& qq)
      : m(mm), a(aa), q(qq) {
    if (a == 0) throw std::invalid_argument("evaluation parameter must be nonzero");
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
  }
};

/// The (m+1)-dimensional evaluation module on basis v_m, ..., v_0 (top
/// first), built from the closed-form action of the degree 0 and ±1 loop
/// generators:
///   x_r^+ v_j = (a q^{-m+2j+2})^r [j+1] v_{j+1}
///   x_r^- v_j = (a q^{-m+2j})^r   [m-j+1] v_{j-1}
Module eval_module(const EvalModuleSpec& spec);
Module eval_module(long m, const Scalar& a, const QParam& q);

/// Closed-form matrix of x_r^± on the evaluation basis (the oracle the
/// recovered Drinfeld matrices are compared against).
QMat eval_xplus_closed_form(const EvalModuleSpec& spec, long r);
QMat eval_xminus_closed_form(const EvalModuleSpec& spec, long r);

/// (x_1^- - a q^m x_0^-) kills the top vector.
bool check_genrel_single(const EvalModuleSpec& spec);

/// (x_2^- - 2 a q^m x_1^- + a^2 q^{2m} x_0^-) kills the top of the tensor
/// square.
bool check_genrel_square(const EvalModuleSpec& spec);

/// Builds the local Weyl module of the squared string, quotients by the
/// submodule generated by the degree-2 relation vector, and returns
/// (dim of the Weyl module, dim of the quotient); the latter is (m+1)^2.
std::pair<long, long> weyl_quotient_dims(const EvalModuleSpec& spec);

}  // namespace qloop
