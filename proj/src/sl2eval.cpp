#include "qloop/sl2eval.hpp"

#include "qloop/drinfeld.hpp"
#include "qloop/weylalg.hpp"

namespace qloop {

namespace {

/// Basis order v_m, v_{m-1}, ..., v_0: index i holds v_{m-i}.
long index_of(long m, long j) { return m - j; }

}  // namespace

QMat eval_xplus_closed_form(const EvalModuleSpec& s, long r) {
  QMat x(s.m + 1, s.m + 1);
  for (long j = 0; j < s.m; ++j) {
    Scalar coeff = scalar_pow(s.a * s.q.pow(-s.m + 2 * j + 2), r) *
                   q_int(j + 1, s.q);
    x.at(index_of(s.m, j + 1), index_of(s.m, j)) = coeff;
  }
  return x;
}

QMat eval_xminus_closed_form(const EvalModuleSpec& s, long r) {
  QMat x(s.m + 1, s.m + 1);
  for (long j = 1; j <= s.m; ++j) {
    Scalar coeff = scalar_pow(s.a * s.q.pow(-s.m + 2 * j), r) *
                   q_int(s.m - j + 1, s.q);
    x.at(index_of(s.m, j - 1), index_of(s.m, j)) = coeff;
  }
  return x;
}

Module eval_module(const EvalModuleSpec& spec) {
  Module v(spec.m + 1, spec.q);
  v.label = "eval(" + std::to_string(spec.m) + "," + scalar_to_string(spec.a) +
            ",q=" + scalar_to_string(spec.q.q) + ")";
  for (long j = 0; j <= spec.m; ++j)
    v.weights[index_of(spec.m, j)] = 2 * j - spec.m;
  v.e1 = eval_xplus_closed_form(spec, 0);
  v.f1 = eval_xminus_closed_form(spec, 0);
  v.e0 = eval_xminus_closed_form(spec, 1) * v.k_inverse();
  v.f0 = v.k_matrix() * eval_xplus_closed_form(spec, -1);
  return v;
}

Module eval_module(long m, const Scalar& a, const QParam& q) {
  return eval_module(EvalModuleSpec(m, a, q));
}

bool check_genrel_single(const EvalModuleSpec& spec) {
  if (spec.m < 1) throw std::invalid_argument("need m >= 1");
  Module v = eval_module(spec);
  QVec top(v.dim, Scalar(0));
  top[0] = 1;
  QMat rel = eval_xminus_closed_form(spec, 1) -
             eval_xminus_closed_form(spec, 0) * (spec.a * spec.q.pow(spec.m));
  return is_zero(rel.apply(top));
}

bool check_genrel_square(const EvalModuleSpec& spec) {
  if (spec.m < 1) throw std::invalid_argument("need m >= 1");
  Module v = eval_module(spec);
  Module w = tensor(v, v);
  DrinfeldMatrices dm = drinfeld_matrices(w, 2);
  QVec top(w.dim, Scalar(0));
  top[0] = 1;
  const Scalar aqm = spec.a * spec.q.pow(spec.m);
  QMat rel = dm.xminus.at(2) - dm.xminus.at(1) * (Scalar(2) * aqm) +
             dm.xminus.at(0) * (aqm * aqm);
  return is_zero(rel.apply(top));
}

std::pair<long, long> weyl_quotient_dims(const EvalModuleSpec& spec) {
  if (spec.m < 1) throw std::invalid_argument("need m >= 1");
  DrinfeldPoly pi = dpoly_pow(qstring(spec.m, spec.a, spec.q), 2);
  Module w = local_weyl(pi, spec.q);
  DrinfeldMatrices dm = drinfeld_matrices(w, 2);
  QVec top(w.dim, Scalar(0));
  top[0] = 1;
  const Scalar aqm = spec.a * spec.q.pow(spec.m);
  QMat rel = dm.xminus.at(2) - dm.xminus.at(1) * (Scalar(2) * aqm) +
             dm.xminus.at(0) * (aqm * aqm);
  QVec z = rel.apply(top);
  long sub = is_zero(z) ? 0 : long(spin(w, z).size());
  return {w.dim, w.dim - sub};
}

}  // namespace qloop
