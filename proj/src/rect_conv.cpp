#include "biregular/rect_conv.hpp"

#include <string>

#include "biregular/errors.hpp"

namespace biregular {

void validate(const ConvDims& dims) {
  if (dims.n < 0 || dims.m < dims.n) {
    throw InvalidInput("convolution dimensions need m >= n >= 0, got m=" + std::to_string(dims.m) +
                       " n=" + std::to_string(dims.n));
  }
}

namespace {

bool should_check(RootCheck check) {
  switch (check) {
    case RootCheck::Skip:
      return false;
    case RootCheck::Enforce:
      return true;
    case RootCheck::Auto:
    default:
#ifdef NDEBUG
      return false;
#else
      return true;
#endif
  }
}

// a_i with p(x) = sum_i x^(n-i) (-1)^i a_i
std::vector<Rational> signed_coefficients(const RatPoly& p, int n) {
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    a[static_cast<std::size_t>(i)] = p.coeff(n - i);
    if (i % 2 == 1) a[static_cast<std::size_t>(i)] = -a[static_cast<std::size_t>(i)];
  }
  return a;
}

}  // namespace

RatPoly rect_conv(const RatPoly& p, const RatPoly& q, ConvDims dims, RootCheck check) {
  validate(dims);
  const int n = dims.n, m = dims.m;
  if (p.degree() != n || q.degree() != n) {
    throw InvalidInput("rect_conv needs two polynomials of degree n=" + std::to_string(n) + ", got " +
                       std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  }
  if (should_check(check) && (!has_nonnegative_roots(p) || !has_nonnegative_roots(q))) {
    throw InvalidInput("rect_conv inputs must have only nonnegative real roots");
  }
  const auto a = signed_coefficients(p, n);
  const auto b = signed_coefficients(q, n);

  std::vector<Integer> fn(static_cast<std::size_t>(n) + 1), fm(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    fn[static_cast<std::size_t>(i)] = factorial(static_cast<unsigned>(n - i));  // (n-i)!
    fm[static_cast<std::size_t>(i)] = factorial(static_cast<unsigned>(m - i));  // (m-i)!
  }
  const Integer n_fact = fn[0], m_fact = fm[0];

  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int l = 0; l <= n; ++l) {
    Rational c = 0;
    const Integer den = n_fact * fn[static_cast<std::size_t>(l)] * m_fact * fm[static_cast<std::size_t>(l)];
    for (int i = 0; i <= l; ++i) {
      const int j = l - i;
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      if (a[ui] == 0 || b[uj] == 0) continue;
      Rational w(fn[ui] * fn[uj] * fm[ui] * fm[uj], den);
      w.canonicalize();
      c += w * a[ui] * b[uj];
    }
    if (l % 2 == 1) c = -c;
    out[static_cast<std::size_t>(n - l)] = c;
  }
  return RatPoly(std::move(out));
}

RatPoly rect_conv_iter(const RatPoly& p, int d, ConvDims dims, RootCheck check) {
  if (d < 1) throw InvalidInput("rect_conv_iter needs d >= 1");
  RatPoly acc = p;
  for (int i = 1; i < d; ++i) acc = rect_conv(acc, p, dims, check);
  return acc;
}

ScaledSqrt operator+(const ScaledSqrt& a, const ScaledSqrt& b) {
  if (a.coeff == 0) return b;
  if (b.coeff == 0) return a;
  if (a.radicand != b.radicand) throw InvalidInput("cannot add square roots with different radicands exactly");
  return ScaledSqrt{a.coeff + b.coeff, a.radicand};
}

UnionGram expected_union_gram(const std::vector<RatPoly>& polys, const std::vector<ScaledSqrt>& trivial,
                              ConvDims dims) {
  validate(dims);
  if (dims.n < 1) throw InvalidInput("expected_union_gram needs n >= 1");
  if (polys.empty() || polys.size() != trivial.size()) {
    throw InvalidInput("expected_union_gram needs one trivial value per polynomial");
  }
  const ConvDims reduced{dims.m - 1, dims.n - 1};
  UnionGram out{polys.front(), trivial.front()};
  if (out.nontrivial.degree() != reduced.n) throw InvalidInput("expected_union_gram: each p_i must have degree n-1");
  for (std::size_t i = 1; i < polys.size(); ++i) {
    if (trivial[i].coeff < 0) throw InvalidInput("expected_union_gram: trivial values must be nonnegative");
    out.nontrivial = rect_conv(out.nontrivial, polys[i], reduced);
    out.trivial = out.trivial + trivial[i];
  }
  return out;
}

RatPoly q_transform_poly(const RatPoly& p, ConvDims dims, const Rational& u) {
  validate(dims);
  if (u < 0) throw InvalidInput("q_transform needs u >= 0");
  const RatPoly sp = s_transform(p);
  const RatPoly svp = s_transform(v_transform(p, dims.m, dims.n));
  return sp * svp - u * (sp.derivative() * svp.derivative());
}

RootBracket q_transform(const RatPoly& p, ConvDims dims, const Rational& u, const Rational& tol) {
  return max_root(q_transform_poly(p, dims, u), tol);
}

Enclosure r_bound(const BoundParams& bp, unsigned bits) {
  validate(bp.dims);
  if (bp.theta < 0 || bp.u < 0) throw InvalidInput("r_bound needs theta >= 0 and u >= 0");
  const Rational m = bp.dims.m, n = bp.dims.n, d = bp.d;
  const Rational& u = bp.u;
  const Enclosure root = Enclosure::sqrt(bp.theta + m * m * u * u, bits);
  const Enclosure inner = Enclosure(Rational(d)) * root + Enclosure(Rational((m + n) * u - d * m * u));
  return inner.square() - Enclosure(Rational((m - n) * (m - n) * u * u));
}

Enclosure u_star(const Rational& theta, int m, int n, int d, unsigned bits) {
  if (theta < 2) throw InvalidInput("u_star is only defined for theta >= 2");
  if (d < 2 || n < 1 || m < n) throw InvalidInput("u_star needs d >= 2 and m >= n >= 1");
  const Rational v_squared = Rational(d - 1) * (ratio(d * m, n) - 1);
  const Enclosure v = Enclosure::sqrt(v_squared, bits);
  const Enclosure sqrt_v = v.sqrt(bits);
  const Enclosure numerator = Enclosure::sqrt(theta, bits) * (v - Enclosure(Rational(1)));
  return numerator / (Enclosure(Rational(2 * m)) * sqrt_v);
}

Enclosure cor_ok_bound(const Rational& theta, int m, int n, int d, unsigned bits) {
  if (theta < 2) throw InvalidInput("cor_ok_bound is only stated for theta >= 2");
  if (d < 1 || n < 1 || m < n) throw InvalidInput("cor_ok_bound needs d >= 1 and m >= n >= 1");
  const Enclosure prefactor = Enclosure::sqrt(theta * n / m, bits);
  const Enclosure sum = Enclosure::sqrt(Rational(d - 1), bits) + Enclosure::sqrt(ratio(d * m, n) - 1, bits);
  return prefactor * sum;
}

Enclosure ramanujan_bound(int k, int d, unsigned bits) {
  if (k < 1 || d < 1) throw InvalidInput("ramanujan_bound needs k, d >= 1");
  return Enclosure::sqrt(Rational(d - 1), bits) + Enclosure::sqrt(Rational(k * d - 1), bits);
}

Enclosure ramanujan_bound_squared(int k, int d, unsigned bits) {
  if (k < 1 || d < 1) throw InvalidInput("ramanujan_bound_squared needs k, d >= 1");
  const Rational a = Rational(d - 1) + Rational(k * d - 1);
  const Rational c = Rational(d - 1) * Rational(k * d - 1);
  // 2 sqrt(c) = sqrt(4c), one rounding instead of two
  return Enclosure(a) + Enclosure::sqrt(4 * c, bits);
}

RatPoly ramanujan_bound_squared_minpoly(int k, int d) {
  // (y - a)^2 - 4c
  const Rational a = Rational(d - 1) + Rational(k * d - 1);
  const Rational c = Rational(d - 1) * Rational(k * d - 1);
  return RatPoly({a * a - 4 * c, -2 * a, Rational(1)});
}

namespace {

Rational claw_shift(int k, int n) {
  const int m = k * n;
  if (m == n) return 0;
  return ratio(m - n, n * (m - 1));
}

}  // namespace

Enclosure shifted_ramanujan_bound(int k, int d, int n, unsigned bits) {
  if (k < 1 || d < 1 || n < 1) throw InvalidInput("shifted_ramanujan_bound needs k, d, n >= 1");
  const Rational x = claw_shift(k, n);
  return Enclosure::sqrt(Rational(d - 1), bits) * Enclosure::sqrt(1 - x, bits) +
         Enclosure::sqrt(Rational(d * k - 1) + x, bits);
}

bool better_than_ramanujan_check(int k, int d, int n, unsigned bits) {
  if (d < 2) throw InvalidInput("better_than_ramanujan_check needs d >= 2");
  if (k < 1 || n < 1) throw InvalidInput("better_than_ramanujan_check needs k, n >= 1");
  // x = 0 makes both sides the same expression
  if (claw_shift(k, n) == 0) return true;
  for (unsigned b = bits; b <= 16384; b *= 2) {
    const Enclosure lhs = shifted_ramanujan_bound(k, d, n, b);
    const Enclosure rhs = ramanujan_bound(k, d, b);
    if (lhs.hi() <= rhs.lo()) return true;
    if (lhs.lo() > rhs.hi()) return false;
  }
  // indistinguishable at 16384 bits
  return true;
}

}  // namespace biregular
