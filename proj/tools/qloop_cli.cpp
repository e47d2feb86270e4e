// Command-line front end: module construction, serialization, analysis
// reports, and the named verification suites.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "qloop/drinfeld.hpp"
#include "qloop/selfext.hpp"
#include "qloop/serialize.hpp"
#include "qloop/simplicity.hpp"
#include "qloop/sl2eval.hpp"
#include "qloop/suites.hpp"
#include "qloop/weylalg.hpp"

using namespace qloop;
using nlohmann::json;

namespace {

Scalar default_q() {
  if (const char* env = std::getenv("QLOOP_Q")) return scalar_from_string(env);
  return Scalar(2);
}

/// Builder grammar: eval(m,a), tensor(E1,E2), eself(E), dual(E),
/// weyl(<dpoly expr>).
Module parse_build_expr(const std::string& s, size_t& pos, const QParam& q);

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

[[noreturn]] void parse_fail(size_t pos, const std::string& msg) {
  throw std::invalid_argument("parse error at position " + std::to_string(pos) +
                              ": " + msg);
}

void expect_char(const std::string& s, size_t& pos, char c) {
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != c)
    parse_fail(pos, std::string("expected '") + c + "'");
  ++pos;
}

std::string read_name(const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  size_t start = pos;
  while (pos < s.size() && isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) parse_fail(pos, "expected a builder name");
  return s.substr(start, pos - start);
}

Scalar read_number(const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() &&
         (isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
    ++pos;
  if (start == pos) parse_fail(pos, "expected a number");
  return scalar_from_string(s.substr(start, pos - start));
}

std::string read_balanced(const std::string& s, size_t& pos) {
  // everything up to the matching close paren of the already-consumed open
  size_t depth = 1, start = pos;
  while (pos < s.size() && depth > 0) {
    if (s[pos] == '(') ++depth;
    if (s[pos] == ')') --depth;
    ++pos;
  }
  if (depth != 0) parse_fail(pos, "unbalanced parentheses");
  return s.substr(start, pos - start - 1);
}

Module parse_build_expr(const std::string& s, size_t& pos, const QParam& q) {
  std::string name = read_name(s, pos);
  expect_char(s, pos, '(');
  if (name == "eval") {
    Scalar m = read_number(s, pos);
    expect_char(s, pos, ',');
    Scalar a = read_number(s, pos);
    expect_char(s, pos, ')');
    if (m.get_den() != 1) parse_fail(pos, "m must be an integer");
    return eval_module(m.get_num().get_si(), a, q);
  }
  if (name == "tensor") {
    Module a = parse_build_expr(s, pos, q);
    expect_char(s, pos, ',');
    Module b = parse_build_expr(s, pos, q);
    expect_char(s, pos, ')');
    return tensor(a, b);
  }
  if (name == "eself") {
    Module a = parse_build_expr(s, pos, q);
    expect_char(s, pos, ')');
    return graded_twist(a);
  }
  if (name == "dual") {
    Module a = parse_build_expr(s, pos, q);
    expect_char(s, pos, ')');
    return dual(a);
  }
  if (name == "weyl") {
    std::string inner = read_balanced(s, pos);
    return local_weyl(parse_dpoly(inner, q), q);
  }
  parse_fail(pos, "unknown builder '" + name + "'");
}

Module parse_build(const std::string& s, const QParam& q) {
  size_t pos = 0;
  Module m = parse_build_expr(s, pos, q);
  skip_ws(s, pos);
  if (pos != s.size()) parse_fail(pos, "trailing input");
  return m;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << std::endl;
  else
    write_json_file(out_path, j);
}

std::string weights_str(const Module& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.weights.size(); ++i)
    s += (i ? "," : "") + std::to_string(m.weights[i]);
  return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for loop-algebra modules and their self-extensions"};
  app.require_subcommand(1);

  std::string q_str, out_path, expr, suite = "all", module_path, what;
  std::string second_path, pi_expr, a_str = "1";
  long window = 0, m_max = 3, m_param = 1;
  bool dump = false;

  app.add_option("--q", q_str, "quantum parameter (rational, default 2)");

  auto* build = app.add_subcommand("build", "construct a module and emit JSON");
  build->fallthrough();
  build->add_option("expr", expr, "builder expression")->required();
  build->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->fallthrough();
  verify->add_option("--suite", suite,
                     "presentation|drinfeld-oracle|theorem1|weyl|ideal|walkprop|all");
  verify->add_option("--m-max", m_max, "largest string length (default 3)");
  verify->add_option("--window", window, "graded window override");
  verify->add_option("--out", out_path, "report file (default stdout)");

  auto* report = app.add_subcommand("report", "analyze a serialized module");
  report->fallthrough();
  report->add_option("module", module_path, "module JSON file")->required();
  report->add_option("what", what, "hw|simple|drinfeld|ext")->required();
  report->add_option("--window", window, "graded window override");

  auto* extcmd = app.add_subcommand("ext1", "extension space between modules");
  extcmd->fallthrough();
  extcmd->add_option("module", module_path, "module JSON file")->required();
  extcmd->add_option("second", second_path, "optional second module");
  extcmd->add_option("--window", window, "graded window override");
  extcmd->add_flag("--dump", dump, "dump the cocycle basis");

  auto* eself = app.add_subcommand("eself", "graded self-extension of a module");
  eself->fallthrough();
  eself->add_option("module", module_path, "module JSON file")->required();
  eself->add_option("--out", out_path, "output file (default stdout)");

  auto* weyl = app.add_subcommand("weyl", "local Weyl module of a polynomial");
  weyl->fallthrough();
  weyl->add_option("--pi", pi_expr, "dpoly expression, e.g. str(2,1)*root(3,2)")
      ->required();
  weyl->add_option("--out", out_path, "output file (default stdout)");

  auto* ideal = app.add_subcommand("ideal-I", "rank-two quotient at a squared string");
  ideal->fallthrough();
  ideal->add_option("--m", m_param, "string length")->required();
  ideal->add_option("--a", a_str, "evaluation parameter (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    QParam q(q_str.empty() ? default_q() : scalar_from_string(q_str));

    if (build->parsed()) {
      Module m = parse_build(expr, q);
      emit(module_to_json(m), out_path);
      std::cerr << "dim " << m.dim << ", weights " << weights_str(m) << ", "
                << m.label << "\n";
      return 0;
    }

    if (verify->parsed()) {
      SuiteConfig cfg;
      cfg.q = q.q;
      cfg.m_max = m_max;
      cfg.window = window;
      cfg.suite = suite;
      auto items = run_suite(cfg);
      emit(suite_report(items), out_path);
      return all_pass(items) ? 0 : 1;
    }

    if (report->parsed()) {
      Module m = module_from_json(read_json_file(module_path));
      long R = window > 0 ? window : default_window(m);
      if (what == "hw") {
        HwAnalysis hw = highest_lweight_vectors(m, R);
        json out;
        out["complete"] = hw.complete;
        out["note"] = hw.note;
        out["lines"] = hw.hw_vector_dim();
        json spaces = json::array();
        for (const auto& s : hw.spaces) {
          json js;
          js["weight"] = s.weight;
          js["block_dim"] = s.block_dim;
          js["eigen_dim"] = s.eigen_basis.size();
          js["semisimple"] = s.semisimple;
          json eig;
          for (const auto& [r, v] : s.h_eigen)
            eig[std::to_string(r)] = scalar_to_string(v);
          js["h_eigenvalues"] = eig;
          spaces.push_back(js);
        }
        out["spaces"] = spaces;
        std::cout << out.dump(2) << std::endl;
        return 0;
      }
      if (what == "simple") {
        SimplicityResult s = is_simple(m, R);
        json out;
        out["verdict"] = s.verdict == Simplicity::Simple
                             ? "simple"
                             : s.verdict == Simplicity::NotSimple ? "not simple"
                                                                  : "undecided";
        out["note"] = s.note;
        if (!s.certificate.empty()) {
          json cert = json::array();
          for (const auto& x : s.certificate) cert.push_back(scalar_to_string(x));
          out["certificate"] = cert;
        }
        std::cout << out.dump(2) << std::endl;
        return 0;
      }
      if (what == "drinfeld") {
        DrinfeldMatrices dm = drinfeld_matrices(m, R);
        json out;
        auto dumpmap = [&](const std::map<long, QMat>& mm) {
          json j;
          for (const auto& [r, mat] : mm) {
            json triplets = json::array();
            for (long i = 0; i < mat.rows(); ++i)
              for (long jj = 0; jj < mat.cols(); ++jj)
                if (mat.at(i, jj) != 0)
                  triplets.push_back(
                      json::array({i, jj, scalar_to_string(mat.at(i, jj))}));
            j[std::to_string(r)] = triplets;
          }
          return j;
        };
        out["window"] = dm.R;
        out["xplus"] = dumpmap(dm.xplus);
        out["xminus"] = dumpmap(dm.xminus);
        out["h"] = dumpmap(dm.h);
        std::cout << out.dump(2) << std::endl;
        return 0;
      }
      if (what == "ext") {
        ExtSpace ext = ext1(m, m, R);
        json out;
        out["dim"] = ext.dim;
        out["dim_cocycles"] = ext.dim_Z;
        out["dim_coboundaries"] = ext.dim_B;
        std::cout << out.dump(2) << std::endl;
        return 0;
      }
      std::cerr << "unknown report kind: " << what << "\n";
      return 2;
    }

    if (extcmd->parsed()) {
      Module a = module_from_json(read_json_file(module_path));
      Module b = second_path.empty() ? a
                                     : module_from_json(read_json_file(second_path));
      long R = window > 0 ? window : default_window(a);
      ExtSpace ext = ext1(a, b, R);
      json out;
      out["dim"] = ext.dim;
      out["dim_cocycles"] = ext.dim_Z;
      out["dim_coboundaries"] = ext.dim_B;
      out["metadata"] = ext.metadata;
      if (dump) {
        json basis = json::array();
        for (const auto& c : ext.basis)
          basis.push_back(cocycle_to_json(c, a.dim, b.dim));
        out["basis"] = basis;
      }
      std::cout << out.dump(2) << std::endl;
      return 0;
    }

    if (eself->parsed()) {
      Module m = module_from_json(read_json_file(module_path));
      emit(module_to_json(graded_twist(m)), out_path);
      return 0;
    }

    if (weyl->parsed()) {
      Module m = local_weyl(parse_dpoly(pi_expr, q), q);
      emit(module_to_json(m), out_path);
      std::cerr << "dim " << m.dim << ", " << m.label << "\n";
      return 0;
    }

    if (ideal->parsed()) {
      IdealQuotientResult r = ideal_I_quotient(m_param, scalar_from_string(a_str), q);
      json out;
      out["codimension"] = r.codimension;
      out["membership"] = r.membership_ok;
      out["non_split"] = r.non_split;
      out["eigenvalue_of_L1"] = scalar_to_string(r.eigenvalue);
      json mats = json::array();
      for (long i = 0; i < long(r.mod.action.size()); ++i) {
        const QMat& mat = r.mod.action[i];
        mats.push_back(json::array(
            {json::array({scalar_to_string(mat.at(0, 0)),
                          scalar_to_string(mat.at(0, 1))}),
             json::array({scalar_to_string(mat.at(1, 0)),
                          scalar_to_string(mat.at(1, 1))})}));
      }
      out["matrices"] = mats;
      json pt = json::array();
      for (const auto& x : r.point) pt.push_back(scalar_to_string(x));
      out["squared_string_coefficients"] = pt;
      std::cout << out.dump(2) << std::endl;
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
