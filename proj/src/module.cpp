#include "qloop/module.hpp"

#include <algorithm>
#include <stdexcept>

namespace qloop {

QMat Module::k_matrix() const {
  QMat k(dim, dim);
  for (long i = 0; i < dim; ++i) k.at(i, i) = q.pow(weights[i]);
  return k;
}

QMat Module::k_inverse() const {
  QMat k(dim, dim);
  for (long i = 0; i < dim; ++i) k.at(i, i) = q.pow(-weights[i]);
  return k;
}

const QMat& Module::action(int generator) const {
  switch (generator) {
    case 0: return e1;
    case 1: return f1;
    case 2: return e0;
    case 3: return f0;
  }
  throw std::invalid_argument("generator index out of range");
}

long Module::top_weight() const {
  long t = 0;
  for (long w : weights) t = std::max(t, w);
  return t;
}

Module trivial_module(const QParam& q) {
  Module m(1, q);
  m.label = "trivial";
  return m;
}

std::string RelationReport::summary() const {
  std::string s;
  for (const auto& it : items)
    if (!it.ok) s += (s.empty() ? "" : ", ") + it.name;
  return pass ? "all relations hold" : "violated: " + s;
}

namespace {

void check(RelationReport& rep, const std::string& name, const QMat& residual) {
  bool ok = residual.is_zero();
  rep.items.push_back({name, ok, residual.max_abs()});
  if (!ok) rep.pass = false;
}

/// sum_m (-1)^m [3 m] x^{3-m} y x^m — the cubic word of the rank-two
/// off-diagonal Cartan entry (1 - a_{01} = 3).
QMat serre_word(const QMat& x, const QMat& y, const QParam& q) {
  QMat acc(x.rows(), x.cols());
  QMat left = QMat::identity(x.rows());  // x^{3-m} built downward
  std::vector<QMat> xpow = {QMat::identity(x.rows()), x, x * x, x * x * x};
  for (long m = 0; m <= 3; ++m) {
    QMat term = xpow[3 - m] * y * xpow[m];
    Scalar c = q_binom(3, m, q);
    if (m % 2) c = -c;
    acc = acc + term * c;
  }
  (void)left;
  return acc;
}

}  // namespace

RelationReport verify_presentation(const Module& v) {
  RelationReport rep;
  const QMat k = v.k_matrix(), ki = v.k_inverse();
  const Scalar denom = v.q.pow(1) - v.q.pow(-1);

  // Cartan conjugation: k g k^{-1} = q^{±2} g, with the affine Cartan
  // matrix entries (2 on the diagonal, -2 off it).
  check(rep, "k e1 k^-1 = q^2 e1", k * v.e1 * ki - v.e1 * v.q.pow(2));
  check(rep, "k f1 k^-1 = q^-2 f1", k * v.f1 * ki - v.f1 * v.q.pow(-2));
  check(rep, "k e0 k^-1 = q^-2 e0", k * v.e0 * ki - v.e0 * v.q.pow(-2));
  check(rep, "k f0 k^-1 = q^2 f0", k * v.f0 * ki - v.f0 * v.q.pow(2));

  // [e_i, f_j] = delta_ij (k_i - k_i^-1)/(q - q^-1), with k_0 = k^-1
  check(rep, "[e1,f1] = (k - k^-1)/(q - q^-1)",
        commutator(v.e1, v.f1) - (k - ki) * (Scalar(1) / denom));
  check(rep, "[e0,f0] = (k^-1 - k)/(q - q^-1)",
        commutator(v.e0, v.f0) - (ki - k) * (Scalar(1) / denom));
  check(rep, "[e1,f0] = 0", commutator(v.e1, v.f0));
  check(rep, "[e0,f1] = 0", commutator(v.e0, v.f1));

  check(rep, "Serre e1e1e1e0", serre_word(v.e1, v.e0, v.q));
  check(rep, "Serre e0e0e0e1", serre_word(v.e0, v.e1, v.q));
  check(rep, "Serre f1f1f1f0", serre_word(v.f1, v.f0, v.q));
  check(rep, "Serre f0f0f0f1", serre_word(v.f0, v.f1, v.q));
  return rep;
}

Module tensor(const Module& a, const Module& b) {
  if (!(a.q == b.q)) throw std::invalid_argument("tensor: mismatched q");
  Module out(a.dim * b.dim, a.q);
  out.label = "tensor(" + a.label + "," + b.label + ")";
  for (long i = 0; i < a.dim; ++i)
    for (long j = 0; j < b.dim; ++j)
      out.weights[i * b.dim + j] = a.weights[i] + b.weights[j];

  auto kron = [&](const QMat& x, const QMat& y) {
    QMat r(a.dim * b.dim, a.dim * b.dim);
    for (long i = 0; i < a.dim; ++i)
      for (long k = 0; k < a.dim; ++k) {
        if (x.at(i, k) == 0) continue;
        for (long j = 0; j < b.dim; ++j)
          for (long l = 0; l < b.dim; ++l)
            if (y.at(j, l) != 0)
              r.at(i * b.dim + j, k * b.dim + l) = x.at(i, k) * y.at(j, l);
      }
    return r;
  };
  const QMat ia = QMat::identity(a.dim), ib = QMat::identity(b.dim);
  const QMat ka = a.k_matrix(), kai = a.k_inverse();
  const QMat kb = b.k_matrix(), kbi = b.k_inverse();
  // coproduct: x+ -> x+ (x) 1 + k (x) x+,  x- -> x- (x) k^-1 + 1 (x) x-,
  // with the affine pair using k_0 = k^-1
  out.e1 = kron(a.e1, ib) + kron(ka, b.e1);
  out.f1 = kron(a.f1, kbi) + kron(ia, b.f1);
  out.e0 = kron(a.e0, ib) + kron(kai, b.e0);
  out.f0 = kron(a.f0, kb) + kron(ia, b.f0);
  return out;
}

Module dual(const Module& v) {
  Module out(v.dim, v.q);
  out.label = "dual(" + v.label + ")";
  for (long i = 0; i < v.dim; ++i) out.weights[i] = -v.weights[i];
  const QMat k = v.k_matrix(), ki = v.k_inverse();
  // (x f)(w) = f(S(x) w): the dual-basis matrix is the transpose of the
  // antipode image. S(e1) = -k^-1 e1, S(f1) = -f1 k, and for the affine
  // pair the Cartan factor is inverted.
  out.e1 = (-(ki * v.e1)).transpose();
  out.f1 = (-(v.f1 * k)).transpose();
  out.e0 = (-(k * v.e0)).transpose();
  out.f0 = (-(v.f0 * ki)).transpose();
  return out;
}

Module direct_sum(const Module& a, const Module& b) {
  if (!(a.q == b.q)) throw std::invalid_argument("direct_sum: mismatched q");
  Module out(a.dim + b.dim, a.q);
  out.label = "sum(" + a.label + "," + b.label + ")";
  for (long i = 0; i < a.dim; ++i) out.weights[i] = a.weights[i];
  for (long i = 0; i < b.dim; ++i) out.weights[a.dim + i] = b.weights[i];
  auto place = [&](QMat& dst, const QMat& x, const QMat& y) {
    for (long i = 0; i < a.dim; ++i)
      for (long j = 0; j < a.dim; ++j) dst.at(i, j) = x.at(i, j);
    for (long i = 0; i < b.dim; ++i)
      for (long j = 0; j < b.dim; ++j) dst.at(a.dim + i, a.dim + j) = y.at(i, j);
  };
  place(out.e1, a.e1, b.e1);
  place(out.f1, a.f1, b.f1);
  place(out.e0, a.e0, b.e0);
  place(out.f0, a.f0, b.f0);
  return out;
}

std::vector<QVec> spin(const Module& v, const QVec& vec) {
  if (long(vec.size()) != v.dim)
    throw std::invalid_argument("spin: vector length mismatch");
  if (is_zero(vec)) throw std::invalid_argument("spin: need a nonzero vector");
  RowEchelon space(v.dim);
  std::vector<QVec> queue;
  space.insert(vec);
  queue.push_back(vec);
  while (!queue.empty()) {
    QVec w = std::move(queue.back());
    queue.pop_back();
    for (int g = 0; g < 4; ++g) {
      QVec img = v.action(g).apply(w);
      if (!is_zero(img) && space.insert(img)) queue.push_back(std::move(img));
    }
  }
  return space.basis();
}

}  // namespace qloop
