#include "qloop/serialize.hpp"

#include <fstream>

namespace qloop {

using nlohmann::json;

namespace {

json sparse_triplets(const QMat& m) {
  json out = json::array();
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0)
        out.push_back(json::array({i, j, scalar_to_string(m.at(i, j))}));
  return out;
}

QMat from_triplets(const json& j, long dim) {
  QMat m(dim, dim);
  for (const auto& t : j) {
    long r = t.at(0).get<long>(), c = t.at(1).get<long>();
    if (r < 0 || c < 0 || r >= dim || c >= dim)
      throw std::invalid_argument("matrix triplet out of range");
    m.at(r, c) = scalar_from_string(t.at(2).get<std::string>());
  }
  return m;
}

}  // namespace

json module_to_json(const Module& v) {
  json j;
  j["dim"] = v.dim;
  j["q"] = scalar_to_string(v.q.q);
  j["weights"] = v.weights;
  j["e1"] = sparse_triplets(v.e1);
  j["f1"] = sparse_triplets(v.f1);
  j["e0"] = sparse_triplets(v.e0);
  j["f0"] = sparse_triplets(v.f0);
  j["label"] = v.label;
  return j;
}

Module module_from_json(const json& j) {
  long dim = j.at("dim").get<long>();
  QParam q(scalar_from_string(j.at("q").get<std::string>()));
  Module v(dim, q);
  auto w = j.at("weights");
  if (long(w.size()) != dim) throw std::invalid_argument("weights length mismatch");
  for (long i = 0; i < dim; ++i) v.weights[i] = w.at(i).get<long>();
  v.e1 = from_triplets(j.at("e1"), dim);
  v.f1 = from_triplets(j.at("f1"), dim);
  v.e0 = from_triplets(j.at("e0"), dim);
  v.f0 = from_triplets(j.at("f0"), dim);
  v.label = j.value("label", "");
  return v;
}

json dpoly_to_json(const DrinfeldPoly& pi) {
  json out = json::array();
  for (const auto& [a, p] : pi.roots())
    out.push_back({{"a", scalar_to_string(a)}, {"p", p}});
  return out;
}

DrinfeldPoly dpoly_from_json(const json& j) {
  std::vector<std::pair<Scalar, long>> roots;
  for (const auto& e : j)
    roots.push_back(
        {scalar_from_string(e.at("a").get<std::string>()), e.at("p").get<long>()});
  return DrinfeldPoly::from_roots(std::move(roots));
}

json cocycle_to_json(const Cocycle& c, long rows, long cols) {
  (void)rows;
  (void)cols;
  json j;
  j["de1"] = sparse_triplets(c.de1);
  j["df1"] = sparse_triplets(c.df1);
  j["de0"] = sparse_triplets(c.de0);
  j["df0"] = sparse_triplets(c.df0);
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace qloop
