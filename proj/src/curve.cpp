#include "cartier/curve.hpp"

#include <string>

#include "cartier/error.hpp"

namespace cartier {

HyperellipticCurve make_curve(const FieldContext& ctx, Polynomial f, unsigned genus) {
  if (!(f.context() == ctx)) throw ContextMismatch("f is not defined over the curve's field");
  if (ctx.characteristic() % 2 == 0) {
    throw ValidationError("hyperelliptic model needs odd characteristic");
  }
  if (genus < 1) throw ValidationError("genus must be at least 1");
  if (f.is_zero()) throw ValidationError("f must be nonzero");
  const std::size_t d = *f.degree();
  if (d != 2 * genus + 1 && d != 2 * genus + 2) {
    throw ValidationError("deg f = " + std::to_string(d) + " but genus " + std::to_string(genus) +
                          " needs degree " + std::to_string(2 * genus + 1) + " or " +
                          std::to_string(2 * genus + 2));
  }
  if (!is_squarefree(f)) throw ValidationError("f is not squarefree");
  return HyperellipticCurve(std::move(f), genus);
}

namespace {

// g x g matrix with (i,j) entry c_(i*stride - j), 1-based i and j.
Matrix read_coefficients(const Polynomial& h, unsigned genus, std::uint64_t stride) {
  Matrix y(h.context(), genus, genus);
  for (unsigned i = 1; i <= genus; ++i) {
    for (unsigned j = 1; j <= genus; ++j) {
      const auto m = static_cast<std::int64_t>(i * stride) - static_cast<std::int64_t>(j);
      y(i - 1, j - 1) = h.coefficient(m);
    }
  }
  return y;
}

}  // namespace

Matrix coefficient_matrix(const HyperellipticCurve& curve) {
  const std::uint64_t p = curve.characteristic();
  return read_coefficients(curve.f().power((p - 1) / 2), curve.genus(), p);
}

Matrix cartier_manin(const HyperellipticCurve& curve) {
  return apply_twist(coefficient_matrix(curve), TwistPower::tau(curve.context().degree()));
}

Matrix hasse_witt(const HyperellipticCurve& curve) { return coefficient_matrix(curve).transpose(); }

CartierData cartier_data(const HyperellipticCurve& curve) {
  Matrix y = coefficient_matrix(curve);
  Matrix b = apply_twist(y, TwistPower::tau(curve.context().degree()));
  Matrix a = y.transpose();
  return {std::move(y), std::move(b), std::move(a)};
}

Matrix iterated_cartier_direct(const HyperellipticCurve& curve, unsigned n, std::uint64_t bound) {
  if (n == 0) throw ValidationError("iterate count must be positive");
  const std::uint64_t p = curve.characteristic();
  const std::uint64_t deg_f = *curve.f().degree();
  std::uint64_t pn = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (pn > bound) throw BoundExceeded("p^n exceeds the polynomial power bound");
    pn *= p;
  }
  const std::uint64_t exponent = (pn - 1) / 2;
  if (exponent > bound / deg_f) {
    throw BoundExceeded("f^((p^n-1)/2) has degree " + std::to_string(exponent * deg_f) +
                        ", above the bound " + std::to_string(bound));
  }
  Matrix m = read_coefficients(curve.f().power(exponent), curve.genus(), pn);
  // p^n-th root = tau^n.
  return apply_twist(m, TwistPower::tau(curve.context().degree()).times(n));
}

}  // namespace cartier
