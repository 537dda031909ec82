#pragma once

#include <iosfwd>
#include <optional>

#include "biregular/enclosure.hpp"
#include "biregular/graph.hpp"
#include "biregular/poly.hpp"

namespace biregular {

// Left degrees d and right degrees k d, counting multiplicity, on a kn x n
// biadjacency.
bool check_biregular(const BigraphAdjacency& g, int n, int k, int d);

// Second largest eigenvalue of [[0, A], [A^T, 0]] in double precision.
// For n = 1 there is no nontrivial singular value and 0 is returned.
double lambda2_numeric(const BigraphAdjacency& g);

struct SpectralCertificate {
  int n = 0;
  int k = 0;
  int d = 0;
  Enclosure bound_enclosure;           // contains (sqrt(d-1) + sqrt(kd-1))^2
  RatPoly gram_poly;                   // gram_charpoly / (x - d^2 k), degree n - 1
  int roots_above_bound = 0;           // distinct roots in (bound_enclosure.hi, cauchy]
  bool root_equals_bound = false;      // a root coincides with the bound exactly
  unsigned precision_bits = 0;         // bits of the final enclosure
  std::optional<RootBracket> max_root; // largest root of gram_poly (lambda_2 squared)

  bool valid() const { return roots_above_bound == 0; }
};

// Exact certificate that every nontrivial squared singular value is at most
// the squared Ramanujan bound. Starts at `bits` and doubles while a root sits
// inside the enclosure. Throws StructuralError when the graph is not
// (n, k, d)-biregular.
SpectralCertificate certify_ramanujan(const BigraphAdjacency& g, int n, int k, int d, unsigned bits = 128);

// "key: value" lines.
void write_certificate(std::ostream& os, const SpectralCertificate& cert);

}  // namespace biregular
