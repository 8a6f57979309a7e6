#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zetamat/bipoly.hpp"
#include "zetamat/cycles.hpp"
#include "zetamat/errors.hpp"
#include "zetamat/families.hpp"
#include "zetamat/incidence.hpp"
#include "zetamat/io.hpp"
#include "zetamat/matrix.hpp"
#include "zetamat/poset.hpp"
#include "zetamat/verify.hpp"

namespace {

using zetamat::IntMatrix;
using zetamat::Poset;
using zetamat::Report;

nlohmann::json matrix_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw zetamat::ParseError("cannot open poset file " + path);
  return zetamat::read_poset(in);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw zetamat::ParseError("cannot open output file " + out_path);
    out << text << "\n";
  }
}

int run_gen(const std::string& family, const std::string& param, const std::string& out_path) {
  Poset p = [&] {
    if (family == "chain") return zetamat::chain(std::stoi(param));
    if (family == "boolean") return zetamat::boolean_algebra(std::stoi(param));
    if (family == "divisor") return zetamat::divisor_poset(std::stoll(param));
    if (family == "file") return load_poset(param);
    throw zetamat::ParseError("unknown family " + family);
  }();
  std::ostringstream os;
  zetamat::write_poset(os, p);
  std::string text = os.str();
  text.pop_back();  // emit() appends the final newline
  emit(text, out_path);
  return 0;
}

int run_compute(const std::string& path, const std::string& what, int cap,
                const std::string& out_path) {
  Poset p = load_poset(path);
  nlohmann::json j;
  j["command"] = "compute --what " + what;
  j["poset"] = {{"file", path}, {"n", p.size()}};
  auto t0 = std::chrono::steady_clock::now();
  if (what == "zeta") {
    j["results"]["zeta"] = matrix_json(zetamat::zeta_matrix(p));
  } else if (what == "mobius") {
    j["results"]["mobius"] = matrix_json(zetamat::mobius_matrix(p));
  } else if (what == "det") {
    j["results"]["det"] = zetamat::det(zetamat::symmetrized(zetamat::zeta_matrix(p))).get_str();
  } else if (what == "charpoly") {
    zetamat::CharPoly c = zetamat::charpoly(
        zetamat::symmetrized(zetamat::adjacency(zetamat::build_digraph(p, zetamat::DigraphMode::strict))));
    nlohmann::json a = nlohmann::json::array();
    for (const auto& ai : c.a) a.push_back(ai.get_str());
    j["results"]["a"] = a;
  } else if (what == "cvec") {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& cs : zetamat::c_coefficients(p, cap)) c.push_back(cs.get_str());
    j["results"]["c"] = c;
  } else {
    throw zetamat::ParseError("unknown --what value " + what);
  }
  j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(j.dump(2), out_path);
  return 0;
}

int run_verify(const std::string& suite, int max_n, int max_rank, int count, std::uint64_t seed,
               int cap, const std::string& out_path) {
  Report r = [&]() -> Report {
    if (suite == "chain") return zetamat::verify_chain(max_n);
    if (suite == "theorem1") return zetamat::verify_theorem1(count, max_n, seed);
    if (suite == "theorem2") return zetamat::verify_theorem2(count, max_n, seed, cap);
    if (suite == "corollary1") return zetamat::verify_corollary1(max_n);
    if (suite == "boolean") return zetamat::verify_boolean(max_rank);
    if (suite == "lemma3") return zetamat::verify_lemma3(max_rank);
    if (suite == "lemma4") return zetamat::verify_lemma4(max_rank);
    if (suite == "eq6") return zetamat::verify_eq6(max_rank);
    throw zetamat::ParseError("unknown suite " + suite);
  }();
  emit(r.to_json(), out_path);
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact zeta/Moebius matrix determinants of finite posets"};
  app.require_subcommand(1);

  std::string family, param, poset_file, what = "det", suite, out_path;
  int max_n = 7, max_rank = 4, count = 100, cap = zetamat::kDefaultEnumerationCap;
  std::uint64_t seed = 42;

  auto* gen = app.add_subcommand("gen", "Write a poset file for a named family");
  gen->add_option("family", family, "chain | boolean | divisor | file")->required();
  gen->add_option("param", param, "size, rank, integer, or input path")->required();
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* compute = app.add_subcommand("compute", "Compute matrices and invariants of a poset file");
  compute->add_option("poset", poset_file, "poset file")->required();
  compute->add_option("--what", what, "zeta | mobius | det | charpoly | cvec");
  compute->add_option("--cap", cap, "enumeration cap for cvec");
  compute->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite,
                     "theorem1 | theorem2 | chain | corollary1 | boolean | lemma3 | lemma4 | eq6")
      ->required();
  verify->add_option("--max-n", max_n, "largest poset size");
  verify->add_option("--max-rank", max_rank, "largest boolean rank");
  verify->add_option("--count", count, "number of random instances");
  verify->add_option("--seed", seed, "random seed (echoed in the report)");
  verify->add_option("--cap", cap, "enumeration cap");
  verify->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(family, param, out_path);
    if (compute->parsed()) return run_compute(poset_file, what, cap, out_path);
    return run_verify(suite, max_n, max_rank, count, seed, cap, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
