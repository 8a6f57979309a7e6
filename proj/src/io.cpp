#include "zetamat/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "zetamat/errors.hpp"

namespace zetamat {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Poset read_poset(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> relations;
  while (std::getline(in, line)) {
    std::istringstream ls(strip_comment(line));
    if (n < 0) {
      if (ls >> n) {
        if (n < 1) throw ParseError("element count must be positive");
        int extra;
        if (ls >> extra) throw ParseError("first line must contain only n");
      }
      continue;
    }
    int i, j;
    if (ls >> i) {
      if (!(ls >> j)) throw ParseError("relation line needs two indices");
      relations.emplace_back(i, j);
    }
  }
  if (n < 0) throw ParseError("missing element count");
  return from_cover_relations(n, relations);
}

void write_poset(std::ostream& out, const Poset& p) {
  out << p.size() << "\n";
  for (auto [i, j] : p.cover_relations()) out << i + 1 << " " << j + 1 << "\n";
}

IntMatrix read_matrix(std::istream& in) {
  int rows, cols;
  if (!(in >> rows >> cols) || rows < 1 || cols < 1) throw ParseError("bad matrix header");
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      std::string tok;
      if (!(in >> tok)) throw ParseError("matrix entries truncated");
      try {
        m(i, j) = mpz_class(tok);
      } catch (const std::invalid_argument&) {
        throw ParseError("bad integer '" + tok + "'");
      }
    }
  return m;
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << " " << m.cols() << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
    out << "\n";
  }
}

Poset random_poset(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> relations;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng() % 10 < 3) relations.emplace_back(i, j);
  return from_cover_relations(n, relations);
}

}  // namespace zetamat
