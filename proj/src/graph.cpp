#include "biregular/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "biregular/errors.hpp"

namespace biregular {

BigraphAdjacency::BigraphAdjacency(int n, int k, int d) : n_(n), k_(k), d_(d) {
  if (n < 1 || k < 1 || d < 1) throw InvalidInput("graph parameters n, k, d must be >= 1");
  mult_.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

std::size_t BigraphAdjacency::index(int left, int right) const {
  if (left < 0 || left >= left_count() || right < 0 || right >= n_) {
    throw InvalidInput("vertex pair (" + std::to_string(left + 1) + ", " + std::to_string(right + 1) +
                       ") out of range");
  }
  return static_cast<std::size_t>(left) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(right);
}

int BigraphAdjacency::left_degree(int left) const {
  int sum = 0;
  for (int j = 0; j < n_; ++j) sum += at(left, j);
  return sum;
}

int BigraphAdjacency::right_degree(int right) const {
  int sum = 0;
  for (int i = 0; i < left_count(); ++i) sum += at(i, right);
  return sum;
}

long BigraphAdjacency::edge_count() const {
  long sum = 0;
  for (int m : mult_) sum += m;
  return sum;
}

RatMatrix BigraphAdjacency::to_matrix() const {
  RatMatrix a(left_count(), n_);
  for (int i = 0; i < left_count(); ++i)
    for (int j = 0; j < n_; ++j) a(i, j) = at(i, j);
  return a;
}

void write_graph(std::ostream& os, const BigraphAdjacency& g) {
  os << g.n() << ' ' << g.k() << ' ' << g.d() << '\n';
  for (int i = 0; i < g.left_count(); ++i)
    for (int j = 0; j < g.n(); ++j)
      if (g.at(i, j) != 0) os << i + 1 << ' ' << j + 1 << ' ' << g.at(i, j) << '\n';
}

BigraphAdjacency read_graph(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InvalidInput("graph: missing header");
  std::istringstream header(line);
  int n = 0, k = 0, d = 0;
  if (!(header >> n >> k >> d)) throw InvalidInput("graph: header must be 'n k d'");
  BigraphAdjacency g(n, k, d);
  int lineno = 1;
  std::pair<int, int> prev{0, 0};
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int left = 0, right = 0, mult = 0;
    if (!(ls >> left >> right >> mult) || mult < 0) {
      throw InvalidInput("graph line " + std::to_string(lineno) + ": expected 'left right multiplicity'");
    }
    if (std::pair{left, right} <= prev) {
      throw InvalidInput("graph line " + std::to_string(lineno) + ": edges must be sorted and distinct");
    }
    prev = {left, right};
    g.at(left - 1, right - 1) = mult;
  }
  return g;
}

}  // namespace biregular
