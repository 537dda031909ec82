#include "biregular/verify.hpp"

#include <Eigen/Dense>
#include <ostream>
#include <string>

#include "biregular/errors.hpp"
#include "biregular/matrix.hpp"
#include "biregular/rect_conv.hpp"

namespace biregular {

bool check_biregular(const BigraphAdjacency& g, int n, int k, int d) {
  if (g.n() != n || g.k() != k) return false;
  for (int i = 0; i < g.left_count(); ++i)
    if (g.left_degree(i) != d) return false;
  for (int j = 0; j < g.right_count(); ++j)
    if (g.right_degree(j) != k * d) return false;
  return true;
}

double lambda2_numeric(const BigraphAdjacency& g) {
  if (g.n() <= 1) return 0.0;
  const int rows = g.left_count(), cols = g.right_count(), size = rows + cols;
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(size, size);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      b(i, rows + j) = g.at(i, j);
      b(rows + j, i) = g.at(i, j);
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InternalError("eigensolver did not converge");
  return solver.eigenvalues()(size - 2);
}

SpectralCertificate certify_ramanujan(const BigraphAdjacency& g, int n, int k, int d, unsigned bits) {
  if (bits < 2) throw InvalidInput("precision must be at least 2 bits");
  if (!check_biregular(g, n, k, d)) {
    throw StructuralError("graph is not (" + std::to_string(n) + ", " + std::to_string(k) + ", " +
                          std::to_string(d) + ")-biregular");
  }
  SpectralCertificate cert;
  cert.n = n;
  cert.k = k;
  cert.d = d;

  const RatPoly gram = gram_charpoly(g.to_matrix());
  try {
    cert.gram_poly = divide_out_root(gram, Rational(d * d * k));
  } catch (const NotARoot&) {
    throw StructuralError("d^2 k is not a root of the Gram polynomial");
  }

  const RatPoly minpoly = ramanujan_bound_squared_minpoly(k, d);
  if (cert.gram_poly.degree() < 1) {
    cert.precision_bits = bits;
    cert.bound_enclosure = ramanujan_bound_squared(k, d, bits);
    return cert;
  }
  const SturmSequence sturm(cert.gram_poly);
  const Rational upper = cauchy_bound(cert.gram_poly);
  cert.max_root = max_root(cert.gram_poly);

  for (unsigned b = bits;; b *= 2) {
    if (b > (1u << 20)) throw InternalError("bound enclosure failed to separate from the Gram roots");
    const Enclosure enc = ramanujan_bound_squared(k, d, b);
    cert.bound_enclosure = enc;
    cert.precision_bits = b;
    cert.roots_above_bound = enc.hi() < upper ? sturm.count(enc.hi(), upper) : 0;
    if (cert.roots_above_bound > 0) return cert;

    const int inside = enc.is_exact() ? 0 : sturm.count(enc.lo(), enc.hi());
    if (enc.is_exact()) {
      // bound is rational; a root at it is still within the bound
      cert.root_equals_bound = cert.gram_poly(enc.lo()) == 0;
      return cert;
    }
    if (inside == 0) return cert;
    // a single root left inside: equal to the bound iff it is a common root
    if (inside == 1) {
      const RatPoly common = gcd(sturm.square_free(), minpoly);
      if (common.degree() >= 1 && sturm_count(common, enc.lo(), enc.hi()) == 1) {
        cert.root_equals_bound = true;
        return cert;
      }
    }
  }
}

void write_certificate(std::ostream& os, const SpectralCertificate& cert) {
  os << "n: " << cert.n << '\n'
     << "k: " << cert.k << '\n'
     << "d: " << cert.d << '\n'
     << "bound_squared_lo: " << to_fraction_string(cert.bound_enclosure.lo()) << '\n'
     << "bound_squared_hi: " << to_fraction_string(cert.bound_enclosure.hi()) << '\n'
     << "bound_squared: " << cert.bound_enclosure.to_string(30) << '\n'
     << "gram_poly:";
  // same record as the polynomial file format, on one line
  os << ' ' << cert.gram_poly.degree();
  for (const auto& c : cert.gram_poly.coeffs()) os << ' ' << to_fraction_string(c);
  os << '\n'
     << "roots_above_bound: " << cert.roots_above_bound << '\n'
     << "root_equals_bound: " << (cert.root_equals_bound ? "true" : "false") << '\n'
     << "precision_bits: " << cert.precision_bits << '\n';
  if (cert.max_root) {
    os << "lambda2_squared_lo: " << to_decimal(cert.max_root->lo, 30) << '\n'
       << "lambda2_squared_hi: " << to_decimal(cert.max_root->hi, 30) << '\n';
  }
  os << "valid: " << (cert.valid() ? "true" : "false") << '\n';
}

}  // namespace biregular
