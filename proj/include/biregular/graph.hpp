#pragma once

#include <iosfwd>
#include <vector>

#include "biregular/matrix.hpp"

namespace biregular {

// kn x n edge multiplicities of a bipartite multigraph; left vertices are
// rows, right vertices columns. Accessors are 0-based.
class BigraphAdjacency {
 public:
  BigraphAdjacency() = default;
  BigraphAdjacency(int n, int k, int d);

  int n() const { return n_; }
  int k() const { return k_; }
  int d() const { return d_; }
  int left_count() const { return k_ * n_; }
  int right_count() const { return n_; }

  int& at(int left, int right) { return mult_[index(left, right)]; }
  int at(int left, int right) const { return mult_[index(left, right)]; }

  int left_degree(int left) const;
  int right_degree(int right) const;
  long edge_count() const;

  RatMatrix to_matrix() const;

  friend bool operator==(const BigraphAdjacency&, const BigraphAdjacency&) = default;

 private:
  std::size_t index(int left, int right) const;
  int n_ = 0;
  int k_ = 0;
  int d_ = 0;
  std::vector<int> mult_;
};

// "n k d" header, then "left right multiplicity" per edge, 1-based,
// sorted by (left, right).
void write_graph(std::ostream& os, const BigraphAdjacency& g);
BigraphAdjacency read_graph(std::istream& is);

}  // namespace biregular
