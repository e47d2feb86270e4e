#include "qloop/drinfeld.hpp"

#include <algorithm>
#include <stdexcept>

#include "qloop/tpoly.hpp"

namespace qloop {

long default_window(const Module& v) {
  return std::max<long>(3, v.top_weight() + 1);
}

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::runtime_error("drinfeld_matrices: nonzero residual in " + what +
                           " (wrong convention or corrupt module)");
}

/// Matrix series exp/log, coefficientwise in u; the coefficients commute
/// here, but the recurrences do not rely on it.
std::vector<QMat> series_exp(const std::vector<QMat>& c, long order, long dim) {
  std::vector<QMat> g(order + 1, QMat(dim, dim));
  g[0] = QMat::identity(dim);
  for (long n = 1; n <= order; ++n) {
    QMat acc(dim, dim);
    for (long k = 1; k <= n; ++k)
      if (k < long(c.size())) acc = acc + c[k] * g[n - k] * Scalar(k);
    g[n] = acc * (Scalar(1) / Scalar(n));
  }
  return g;
}

std::vector<QMat> series_log(const std::vector<QMat>& g, long order, long dim) {
  std::vector<QMat> c(order + 1, QMat(dim, dim));
  for (long n = 1; n <= order; ++n) {
    QMat acc = g[n] * Scalar(n);
    for (long k = 1; k < n; ++k) acc = acc - c[k] * g[n - k] * Scalar(k);
    c[n] = acc * (Scalar(1) / Scalar(n));
  }
  return c;
}

}  // namespace

DrinfeldMatrices drinfeld_matrices(const Module& v, long R) {
  if (R < 1) throw std::invalid_argument("window must be at least 1");
  const long n = v.dim;
  const QParam& q = v.q;
  const QMat k = v.k_matrix(), ki = v.k_inverse();
  const Scalar denom = q.pow(1) - q.pow(-1);
  const Scalar two = q_int(2, q);

  DrinfeldMatrices dm;
  dm.R = R;
  dm.xplus[0] = v.e1;
  dm.xminus[0] = v.f1;
  dm.xminus[1] = v.e0 * k;
  dm.xplus[-1] = ki * v.f0;

  // degree ±1 diagonal generators from the first mixed brackets
  QMat phi1 = commutator(dm.xplus[0], dm.xminus[1]) * denom;
  QMat phim1 = commutator(dm.xminus[0], dm.xplus[-1]) * denom;
  QMat h1 = ki * phi1 * (Scalar(1) / denom);
  QMat hm1 = -(k * phim1 * (Scalar(1) / denom));
  dm.h[1] = h1;
  dm.h[-1] = hm1;

  // walk the window: [h_{±1}, x^eps_r] = ±eps [2] x^eps_{r±1}; where the
  // walk lands on a directly-assigned matrix the two must agree
  for (long r = 0; r < R; ++r) {
    QMat up = commutator(h1, dm.xplus.at(r)) * (Scalar(1) / two);
    dm.xplus[r + 1] = up;
    QMat dn = -(commutator(h1, dm.xminus.at(r)) * (Scalar(1) / two));
    if (dm.xminus.count(r + 1)) {
      if (!(dn == dm.xminus.at(r + 1))) bad("degree-1 lowering consistency");
    } else {
      dm.xminus[r + 1] = dn;
    }
  }
  for (long r = 0; r > -R; --r) {
    QMat up = commutator(hm1, dm.xplus.at(r)) * (Scalar(1) / two);
    if (dm.xplus.count(r - 1)) {
      if (!(up == dm.xplus.at(r - 1))) bad("degree-(-1) raising consistency");
    } else {
      dm.xplus[r - 1] = up;
    }
    dm.xminus[r - 1] = -(commutator(hm1, dm.xminus.at(r)) * (Scalar(1) / two));
  }

  dm.phi_plus[0] = k;
  dm.phi_minus[0] = ki;
  for (long m = 1; m <= R; ++m) {
    dm.phi_plus[m] = commutator(dm.xplus[0], dm.xminus[m]) * denom;
    dm.phi_minus[-m] = commutator(dm.xminus[0], dm.xplus[-m]) * denom;
  }

  // diagonal generators of higher degree from the series logarithm of
  // k^-1 phi+(u) = exp((q - q^-1) sum h_s u^s)
  {
    std::vector<QMat> gp(R + 1, QMat(n, n)), gm(R + 1, QMat(n, n));
    for (long m = 0; m <= R; ++m) {
      gp[m] = ki * dm.phi_plus[m];
      gm[m] = k * dm.phi_minus[-m];
    }
    auto lp = series_log(gp, R, n);
    auto lm = series_log(gm, R, n);
    for (long s = 1; s <= R; ++s) {
      dm.h[s] = lp[s] * (Scalar(1) / denom);
      dm.h[-s] = -(lm[s] * (Scalar(1) / denom));
    }
    if (!(dm.h[1] == h1) || !(dm.h[-1] == hm1)) bad("degree-1 diagonal consistency");
  }

  // --- window verification -------------------------------------------
  auto xm = [&](long r, int sign) -> const QMat& {
    return sign > 0 ? dm.xplus.at(r) : dm.xminus.at(r);
  };

  // Cartan conjugation and grading
  for (long r = -R; r <= R; ++r)
    for (int sign : {+1, -1}) {
      QMat res = k * xm(r, sign) * ki - xm(r, sign) * q.pow(2 * sign);
      if (!res.is_zero()) bad("Cartan conjugation");
    }

  // h's commute with each other and with k
  for (auto& [s1, a] : dm.h) {
    if (!commutator(k, a).is_zero()) bad("k-h commutation");
    for (auto& [s2, b] : dm.h)
      if (!commutator(a, b).is_zero()) bad("h-h commutation");
  }

  // [h_s, x^±_r] = ±(1/s)[2s] x^±_{r+s}
  for (auto& [s, hs] : dm.h)
    for (long r = -R; r <= R; ++r) {
      if (r + s < -R || r + s > R) continue;
      Scalar c = q_int(2 * s, q) / Scalar(s);
      for (int sign : {+1, -1}) {
        QMat res = commutator(hs, xm(r, sign)) -
                   xm(r + s, sign) * (sign > 0 ? c : -c);
        if (!res.is_zero()) bad("h-x relation");
      }
    }

  // quadratic same-sign relation
  for (int sign : {+1, -1}) {
    Scalar qa = q.pow(2 * sign);
    for (long r = -R + 1; r <= R; ++r)
      for (long l = -R; l < R; ++l) {
        const QMat &xr = xm(r, sign), &xl = xm(l, sign);
        const QMat &xrm = xm(r - 1, sign), &xlp = xm(l + 1, sign);
        QMat lhs = xr * xl - xl * xr * qa;
        QMat rhs = xrm * xlp * qa - xlp * xrm;
        if (!(lhs == rhs)) bad("same-sign quadratic relation");
      }
  }

  // mixed bracket against the diagonal series
  for (long r = -R; r <= R; ++r)
    for (long s = -R; s <= R; ++s) {
      long m = r + s;
      if (m < -R || m > R) continue;
      QMat phip = m >= 0 ? dm.phi_plus.at(m) : QMat(n, n);
      QMat phim = m <= 0 ? dm.phi_minus.at(m) : QMat(n, n);
      QMat res = commutator(dm.xplus.at(r), dm.xminus.at(s)) -
                 (phip - phim) * (Scalar(1) / denom);
      if (!res.is_zero()) bad("mixed bracket");
    }

  return dm;
}

long HwAnalysis::hw_vector_dim() const {
  long d = 0;
  for (const auto& s : spaces) d += long(s.eigen_basis.size());
  return d;
}

HwAnalysis highest_lweight_vectors(const Module& v, long R) {
  return highest_lweight_vectors(v, drinfeld_matrices(v, R));
}

HwAnalysis highest_lweight_vectors(const Module& v, const DrinfeldMatrices& dm) {
  HwAnalysis out;
  const long n = v.dim;
  const long R = dm.R;

  std::vector<long> weight_values;
  for (long w : v.weights)
    if (std::find(weight_values.begin(), weight_values.end(), w) ==
        weight_values.end())
      weight_values.push_back(w);
  std::sort(weight_values.rbegin(), weight_values.rend());

  for (long mu : weight_values) {
    std::vector<long> idx;
    for (long i = 0; i < n; ++i)
      if (v.weights[i] == mu) idx.push_back(i);
    const long d = long(idx.size());

    // raising kernel inside the weight space
    QMat stack(n * (2 * R + 1), d);
    long row0 = 0;
    for (long r = -R; r <= R; ++r) {
      const QMat& xp = dm.xplus.at(r);
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < d; ++j) stack.at(row0 + i, j) = xp.at(i, idx[j]);
      row0 += n;
    }
    auto ker = kernel_basis(stack);
    if (ker.empty()) continue;

    // refine into joint generalized eigenspaces of the diagonal generators
    struct Block {
      std::vector<QVec> basis;  // coordinates in idx-space
      std::map<long, Scalar> eigen;
    };
    std::vector<Block> blocks = {{ker, {}}};
    for (long s = -R; s <= R; ++s) {
      if (s == 0) continue;
      const QMat& hs = dm.h.at(s);
      std::vector<Block> next;
      for (auto& blk : blocks) {
        const long bd = long(blk.basis.size());
        // matrix of h_s on the block, in the echelonized block basis
        RowEchelon coordspace(d);
        for (auto& b : blk.basis) coordspace.insert(b);
        std::vector<QVec> eb = coordspace.basis();
        QMat a2(bd, bd);
        for (long col = 0; col < bd; ++col) {
          QVec full(n, Scalar(0));
          for (long j = 0; j < d; ++j) full[idx[j]] = eb[col][j];
          QVec img = hs.apply(full);
          QVec small(d);
          for (long j = 0; j < d; ++j) small[j] = img[idx[j]];
          auto coord = coordspace.coordinates(small);
          if (!coord) {
            out.complete = false;
            out.note = "diagonal generator does not preserve the raising kernel";
            return out;
          }
          for (long rr = 0; rr < bd; ++rr) a2.at(rr, col) = (*coord)[rr];
        }
        auto cp = char_poly(a2);
        auto rr = rational_roots(cp);
        if (!rr.complete) {
          out.complete = false;
          out.note = "characteristic polynomial does not split over the rationals";
          return out;
        }
        for (auto& [lam, mult] : rr.roots) {
          // generalized eigenspace: kernel of (A - lam)^bd
          QMat shifted = a2;
          for (long i = 0; i < bd; ++i) shifted.at(i, i) -= lam;
          QMat power = QMat::identity(bd);
          for (long e = 0; e < bd; ++e) power = power * shifted;
          auto kb = kernel_basis(power);
          Block nb;
          nb.eigen = blk.eigen;
          nb.eigen[s] = lam;
          for (auto& cvec : kb) {
            QVec amb(d, Scalar(0));
            for (long t = 0; t < bd; ++t)
              for (long j = 0; j < d; ++j) amb[j] += cvec[t] * eb[t][j];
            nb.basis.push_back(std::move(amb));
          }
          next.push_back(std::move(nb));
        }
      }
      blocks = std::move(next);
    }

    for (auto& blk : blocks) {
      HwSubspace hw;
      hw.weight = mu;
      hw.h_eigen = blk.eigen;
      hw.block_dim = long(blk.basis.size());
      // joint eigen part: intersect kernels of (h_s - lam_s) on the block
      RowEchelon bspace(d);
      for (auto& b : blk.basis) bspace.insert(b);
      std::vector<QVec> eb = bspace.basis();
      const long bd = long(eb.size());
      QMat stack2(bd * long(blk.eigen.size()), bd);
      long r0 = 0;
      for (auto& [s, lam] : blk.eigen) {
        const QMat& hs = dm.h.at(s);
        for (long col = 0; col < bd; ++col) {
          QVec full(n, Scalar(0));
          for (long j = 0; j < d; ++j) full[idx[j]] = eb[col][j];
          QVec img = hs.apply(full);
          QVec small(d);
          for (long j = 0; j < d; ++j) small[j] = img[idx[j]] - lam * eb[col][j];
          auto coord = bspace.coordinates(small);
          if (!coord) {
            out.complete = false;
            out.note = "eigenblock not invariant";
            return out;
          }
          for (long rr2 = 0; rr2 < bd; ++rr2) stack2.at(r0 + rr2, col) = (*coord)[rr2];
        }
        r0 += bd;
      }
      for (auto& cvec : kernel_basis(stack2)) {
        QVec amb(n, Scalar(0));
        for (long t = 0; t < bd; ++t)
          for (long j = 0; j < d; ++j) amb[idx[j]] += cvec[t] * eb[t][j];
        hw.eigen_basis.push_back(std::move(amb));
      }
      hw.semisimple = long(hw.eigen_basis.size()) == hw.block_dim;
      out.spaces.push_back(std::move(hw));
    }
  }
  return out;
}

}  // namespace qloop
