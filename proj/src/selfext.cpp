#include "qloop/selfext.hpp"

#include <algorithm>
#include <map>

#include "qloop/sl2eval.hpp"

namespace qloop {

Module graded_twist(const Module& v) {
  Cocycle c;
  c.de1 = QMat(v.dim, v.dim);
  c.df1 = QMat(v.dim, v.dim);
  c.de0 = v.e0;            // loop degree +1
  c.df0 = -v.f0;           // loop degree -1
  Module e = extension_from_cocycle(v, v, c, "eself(" + v.label + ")");
  return e;
}

const QMat& Cocycle::block(int g) const {
  switch (g) {
    case 0: return de1;
    case 1: return df1;
    case 2: return de0;
    case 3: return df0;
  }
  throw std::invalid_argument("generator index out of range");
}

Module extension_from_cocycle(const Module& v, const Module& w,
                              const Cocycle& c, const std::string& label) {
  if (!(v.q == w.q)) throw std::invalid_argument("mismatched q");
  Module e(w.dim + v.dim, v.q);
  e.label = label;
  for (long i = 0; i < w.dim; ++i) e.weights[i] = w.weights[i];
  for (long i = 0; i < v.dim; ++i) e.weights[w.dim + i] = v.weights[i];
  auto fill = [&](QMat& dst, const QMat& mw, const QMat& mv, const QMat& delta) {
    for (long i = 0; i < w.dim; ++i)
      for (long j = 0; j < w.dim; ++j) dst.at(i, j) = mw.at(i, j);
    for (long i = 0; i < v.dim; ++i)
      for (long j = 0; j < v.dim; ++j) dst.at(w.dim + i, w.dim + j) = mv.at(i, j);
    for (long i = 0; i < w.dim; ++i)
      for (long j = 0; j < v.dim; ++j) dst.at(i, w.dim + j) = delta.at(i, j);
  };
  fill(e.e1, w.e1, v.e1, c.de1);
  fill(e.f1, w.f1, v.f1, c.df1);
  fill(e.e0, w.e0, v.e0, c.de0);
  fill(e.f0, w.f0, v.f0, c.df0);
  return e;
}

namespace {

/// One additive term A * delta_g * B of a linearized relation.
struct Sandwich {
  int g;
  QMat left;
  QMat right;
};

/// Linearization of a product word: substitute the derivative in every
/// letter position, acting by W on the left of it and by V on the right.
void linearize_word(const Module& v, const Module& w,
                    const std::vector<int>& word, const Scalar& coeff,
                    std::vector<Sandwich>& out) {
  const long p = long(word.size());
  std::vector<QMat> prefix(p + 1), suffix(p + 1);
  prefix[0] = QMat::identity(w.dim);
  for (long i = 0; i < p; ++i) prefix[i + 1] = prefix[i] * w.action(word[i]);
  suffix[p] = QMat::identity(v.dim);
  for (long i = p; i-- > 0;) suffix[i] = v.action(word[i]) * suffix[i + 1];
  for (long i = 0; i < p; ++i)
    out.push_back({word[i], prefix[i] * coeff, suffix[i + 1]});
}

struct Relation {
  std::string name;
  long shift;  // total weight shift of the relation word
  std::vector<Sandwich> terms;
};

std::vector<Relation> linearized_relations(const Module& v, const Module& w) {
  const QParam& q = v.q;
  std::vector<Relation> rels;

  // commutators [e_i, f_j]; the diagonal Cartan terms drop out because the
  // Cartan block of any type-1 extension is diagonal
  const int E1 = 0, F1 = 1, E0 = 2, F0 = 3;
  auto bracket = [&](int a, int b, const std::string& name) {
    Relation r{name, kGeneratorShift[a] + kGeneratorShift[b], {}};
    linearize_word(v, w, {a, b}, Scalar(1), r.terms);
    linearize_word(v, w, {b, a}, Scalar(-1), r.terms);
    rels.push_back(std::move(r));
  };
  bracket(E1, F1, "[e1,f1]");
  bracket(E0, F0, "[e0,f0]");
  bracket(E1, F0, "[e1,f0]");
  bracket(E0, F1, "[e0,f1]");

  // cubic Serre words, 1 - a_{01} = 3
  auto serre = [&](int x, int y, const std::string& name) {
    Relation r{name, 3 * kGeneratorShift[x] + kGeneratorShift[y], {}};
    for (long m = 0; m <= 3; ++m) {
      Scalar c = q_binom(3, m, q);
      if (m % 2) c = -c;
      std::vector<int> word;
      for (long i = 0; i < 3 - m; ++i) word.push_back(x);
      word.push_back(y);
      for (long i = 0; i < m; ++i) word.push_back(x);
      linearize_word(v, w, word, c, r.terms);
    }
    rels.push_back(std::move(r));
  };
  serre(E1, E0, "serre(e1,e0)");
  serre(E0, E1, "serre(e0,e1)");
  serre(F1, F0, "serre(f1,f0)");
  serre(F0, F1, "serre(f0,f1)");
  return rels;
}

}  // namespace

ExtSpace ext1(const Module& v, const Module& w, long R) {
  if (!(v.q == w.q)) throw std::invalid_argument("ext1: mismatched q");
  ExtSpace out;
  out.vdim = v.dim;
  out.wdim = w.dim;

  // unknown columns: weight-homogeneous entries of the four blocks
  std::map<std::tuple<int, long, long>, long> col_of;
  for (int g = 0; g < 4; ++g)
    for (long i = 0; i < w.dim; ++i)
      for (long j = 0; j < v.dim; ++j)
        if (w.weights[i] == v.weights[j] + kGeneratorShift[g]) {
          col_of[{g, i, j}] = long(out.columns.size());
          out.columns.push_back({g, i, j});
        }
  const long ncols = long(out.columns.size());

  // cocycle space: kernel of the linearized relations
  RowEchelon constraints(ncols);
  for (const auto& rel : linearized_relations(v, w)) {
    for (long i = 0; i < w.dim; ++i)
      for (long j = 0; j < v.dim; ++j) {
        if (w.weights[i] != v.weights[j] + rel.shift) continue;
        QVec row(ncols, Scalar(0));
        bool nonzero = false;
        for (const auto& t : rel.terms) {
          for (long b = 0; b < v.dim; ++b) {
            const Scalar& rv = t.right.at(b, j);
            if (rv == 0) continue;
            for (long a = 0; a < w.dim; ++a) {
              const Scalar& lv = t.left.at(i, a);
              if (lv == 0) continue;
              auto it = col_of.find({t.g, a, b});
              if (it == col_of.end()) continue;  // structurally zero block entry
              row[it->second] += lv * rv;
              nonzero = true;
            }
          }
        }
        if (nonzero) constraints.insert(std::move(row));
      }
  }
  QMat cmat(constraints.rank(), ncols);
  for (long i = 0; i < constraints.rank(); ++i)
    for (long j = 0; j < ncols; ++j) cmat.at(i, j) = constraints.basis()[i][j];
  std::vector<QVec> cocycles = kernel_basis(cmat);
  out.dim_Z = long(cocycles.size());

  // coboundaries: images of weight-preserving maps N, delta_g = g N - N g
  RowEchelon cobound(ncols);
  for (long a = 0; a < w.dim; ++a)
    for (long b = 0; b < v.dim; ++b) {
      if (w.weights[a] != v.weights[b]) continue;
      QVec vec(ncols, Scalar(0));
      for (int g = 0; g < 4; ++g) {
        const QMat& gw = w.action(g);
        const QMat& gv = v.action(g);
        for (long i = 0; i < w.dim; ++i)
          if (gw.at(i, a) != 0) {
            auto it = col_of.find({g, i, b});
            if (it != col_of.end()) vec[it->second] += gw.at(i, a);
          }
        for (long j = 0; j < v.dim; ++j)
          if (gv.at(b, j) != 0) {
            auto it = col_of.find({g, a, j});
            if (it != col_of.end()) vec[it->second] -= gv.at(b, j);
          }
      }
      if (cobound.insert(vec)) out.coboundary_vecs.push_back(vec);
    }
  out.dim_B = cobound.rank();

  // coboundaries are cocycles; representatives grow the echelon past them
  for (const auto& z : cocycles) {
    if (cobound.insert(z)) out.rep_vecs.push_back(z);
  }
  out.dim = out.dim_Z - out.dim_B;
  if (out.dim != long(out.rep_vecs.size()))
    throw std::runtime_error("ext1: coboundary space escapes the cocycle space");

  for (const auto& rep : out.rep_vecs) {
    Cocycle c;
    c.de1 = QMat(w.dim, v.dim);
    c.df1 = QMat(w.dim, v.dim);
    c.de0 = QMat(w.dim, v.dim);
    c.df0 = QMat(w.dim, v.dim);
    QMat* blocks[4] = {&c.de1, &c.df1, &c.de0, &c.df0};
    for (long col = 0; col < ncols; ++col) {
      if (rep[col] == 0) continue;
      auto [g, i, j] = out.columns[col];
      blocks[g]->at(i, j) = rep[col];
    }
    out.basis.push_back(std::move(c));
  }
  out.metadata = "ext1(" + v.label + (v.label == w.label ? "" : ", " + w.label) +
                 "), window " + std::to_string(R) +
                 " (finite presentation; window-independent)";
  return out;
}

QVec class_of(const Module& v_ext, const Module& v, const ExtSpace& ext) {
  const long n = v.dim;
  if (v_ext.dim != 2 * n)
    throw std::invalid_argument("class_of: extension must have twice the dimension");
  // verify the block-triangular shape with both diagonal blocks equal to V
  for (int g = 0; g < 4; ++g) {
    const QMat& big = v_ext.action(g);
    const QMat& small = v.action(g);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        if (big.at(i, j) != small.at(i, j) ||
            big.at(n + i, n + j) != small.at(i, j))
          throw std::invalid_argument("class_of: diagonal blocks differ from V");
        if (big.at(n + i, j) != 0)
          throw std::invalid_argument("class_of: lower-left block not zero");
      }
  }
  // extract the off-diagonal blocks in unknown coordinates
  const long ncols = long(ext.columns.size());
  QVec target(ncols, Scalar(0));
  std::map<std::tuple<int, long, long>, long> col_of;
  for (long c = 0; c < ncols; ++c) col_of[ext.columns[c]] = c;
  for (int g = 0; g < 4; ++g) {
    const QMat& big = v_ext.action(g);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        const Scalar& val = big.at(i, n + j);
        if (val == 0) continue;
        auto it = col_of.find({g, i, j});
        if (it == col_of.end())
          throw std::invalid_argument(
              "class_of: off-diagonal entry outside the weight-homogeneous "
              "pattern");
        target[it->second] = val;
      }
  }
  // solve target = reps * x + coboundaries * y
  const long k = long(ext.rep_vecs.size());
  const long b = long(ext.coboundary_vecs.size());
  QMat a(ncols, k + b);
  for (long i = 0; i < ncols; ++i) {
    for (long j = 0; j < k; ++j) a.at(i, j) = ext.rep_vecs[j][i];
    for (long j = 0; j < b; ++j) a.at(i, k + j) = ext.coboundary_vecs[j][i];
  }
  auto sol = solve(a, target);
  if (!sol)
    throw std::invalid_argument("class_of: blocks do not satisfy the cocycle "
                                "equations");
  QVec coords(sol->begin(), sol->begin() + k);
  return coords;
}

std::vector<std::pair<long, Scalar>> string_decomposition(
    const DrinfeldPoly& pi, const QParam& q) {
  std::map<Scalar, long> pool;
  for (const auto& [a, p] : pi.roots()) pool[a] = p;
  auto take = [&](const Scalar& r) {
    auto it = pool.find(r);
    if (it == pool.end()) return false;
    if (--it->second == 0) pool.erase(it);
    return true;
  };
  auto present = [&](const Scalar& r) { return pool.count(r) > 0; };
  std::vector<std::pair<long, Scalar>> strings;
  const Scalar q2 = q.pow(2);
  while (!pool.empty()) {
    // a chain top: no root one step above it
    Scalar top = pool.begin()->first;
    for (const auto& [r, p] : pool)
      if (!present(r * q2)) {
        top = r;
        break;
      }
    long m = 0;
    Scalar walk = top;
    while (take(walk)) {
      ++m;
      walk = walk / q2;
    }
    // center a with top = a q^{m-1}
    Scalar center = top * q.pow(-(m - 1));
    strings.push_back({m, center});
  }
  std::sort(strings.begin(), strings.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  return strings;
}

std::string Theorem1Part2Report::summary() const {
  std::string s;
  s += "pi = " + pi.to_string();
  s += "; simple = " + std::string(simple.verdict == Simplicity::Simple
                                       ? "yes"
                                       : simple.verdict == Simplicity::NotSimple
                                             ? "no"
                                             : "undecided");
  if (ext_dim >= 0) s += "; dim ext1 = " + std::to_string(ext_dim);
  if (applicable) {
    s += "; pi0 = " + pi0.to_string() + ", s = " + std::to_string(this->s);
    s += pi0_single_string ? "; pi0 is a single string"
                           : "; pi0 is NOT a single string";
    s += factorization_confirmed ? "; factorization confirmed"
                                 : "; factorization NOT confirmed";
  } else {
    s += "; criterion not applicable (dim != 1): " + note;
  }
  return s;
}

Theorem1Part2Report theorem1_part2_analysis(const DrinfeldPoly& pi,
                                            const QParam& q) {
  if (pi.trivial()) throw std::invalid_argument("nontrivial pi required");
  Theorem1Part2Report rep;
  rep.pi = pi;
  rep.strings = string_decomposition(pi, q);

  Module v = eval_module(rep.strings[0].first, rep.strings[0].second, q);
  for (size_t i = 1; i < rep.strings.size(); ++i)
    v = tensor(v, eval_module(rep.strings[i].first, rep.strings[i].second, q));

  long R = std::max<long>(3, pi.degree() + 1);
  rep.simple = is_simple(v, R);
  if (rep.simple.verdict != Simplicity::Simple) {
    rep.note = "input module not certified simple: " + rep.simple.note;
    return rep;
  }
  rep.ext_dim = ext1(v, v, R).dim;
  auto [pi0, s] = primitive_root(pi);
  rep.pi0 = pi0;
  rep.s = s;
  auto pieces = string_decomposition(pi0, q);
  rep.pi0_single_string =
      pieces.size() == 1 && pi0.degree() == pieces[0].first;
  rep.applicable = (rep.ext_dim == 1);
  if (rep.applicable) {
    rep.factorization_confirmed =
        (dpoly_pow(pi0, s) == pi) && rep.pi0_single_string;
  } else {
    rep.note = "dim ext1 = " + std::to_string(rep.ext_dim) +
               "; pi = pi0^s holds with s = " + std::to_string(s) +
               (rep.pi0_single_string ? " (pi0 a single string)"
                                      : " (pi0 not a single string)");
  }
  return rep;
}

bool walkprop_forcing_check(long m, long a_cart, const QParam& q) {
  QMat sys(3, 3);
  for (long r = 1; r <= 3; ++r) {
    sys.at(r - 1, 0) = -q_int(r * a_cart, q) * q.pow(r * (a_cart - m));
    sys.at(r - 1, 1) = q_int(r * m, q);
    sys.at(r - 1, 2) = -q.pow(r * a_cart) * q_int(r * (m - a_cart), q);
  }
  auto ker = kernel_basis(sys);
  if (ker.size() != 1) return false;
  const QVec& z = ker[0];
  return z[0] != 0 && z[0] == z[1] && z[1] == z[2];
}

}  // namespace qloop
