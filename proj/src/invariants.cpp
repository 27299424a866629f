#include "cartier/invariants.hpp"

#include <string>

#include "cartier/error.hpp"

namespace cartier {

namespace {

Polynomial to_prime_field(const Polynomial& a, const char* what) {
  for (const auto& c : a.coeffs()) {
    if (!c.in_prime_subfield()) {
      throw InternalError(std::string(what) + " has coefficient " + c.to_string() +
                          " outside F_p; iterate order is wrong");
    }
  }
  return change_prime_field(a, a.context().prime_subfield());
}

}  // namespace

Matrix frobenius_iterate(const HyperellipticCurve& curve) {
  const unsigned e = curve.context().degree();
  return twisted_product(hasse_witt(curve), TwistPower::sigma(e), e);
}

Matrix cartier_iterate(const HyperellipticCurve& curve) {
  const unsigned e = curve.context().degree();
  return twisted_product(cartier_manin(curve), TwistPower::tau(e), e);
}

Polynomial l_poly_mod_p(const HyperellipticCurve& curve) {
  // det(I - M T) = T^g det(T^-1 I - M) = reverse of the char poly.
  const Polynomial cp = char_poly(frobenius_iterate(curve));
  return to_prime_field(cp.reversed(curve.genus()), "det(I - M T)");
}

Polynomial chi_mod_p(const HyperellipticCurve& curve) {
  // (-1)^g T^g det(M - T I) = T^g det(T I - M) since M is g x g.
  const Polynomial cp = char_poly(frobenius_iterate(curve));
  const Polynomial tg = Polynomial::monomial(curve.context().one(), curve.genus());
  return to_prime_field(tg * cp, "chi mod p");
}

ModPZeta mod_p_zeta(const HyperellipticCurve& curve) {
  return {l_poly_mod_p(curve), chi_mod_p(curve)};
}

std::size_t p_rank(const HyperellipticCurve& curve) {
  const unsigned g = curve.genus();
  const unsigned e = curve.context().degree();
  const Matrix m = frobenius_iterate(curve);
  const std::size_t stable = rank(matrix_power(m, g));

  const std::size_t from_l = *l_poly_mod_p(curve).degree();
  const std::size_t from_twisted =
      rank(twisted_product(hasse_witt(curve), TwistPower::sigma(e), std::uint64_t{g} * e));
  if (stable != from_l || stable != from_twisted) {
    throw InternalError("p-rank self-check failed: rank(M^g) = " + std::to_string(stable) +
                        ", deg(L mod p) = " + std::to_string(from_l) +
                        ", rank of (g*e)-fold iterate = " + std::to_string(from_twisted));
  }
  return stable;
}

std::size_t a_number(const HyperellipticCurve& curve) {
  return curve.genus() - rank(cartier_manin(curve));
}

bool is_superspecial(const HyperellipticCurve& curve) { return cartier_manin(curve).is_zero(); }

Matrix naive_yui_product(const HyperellipticCurve& curve) {
  const unsigned e = curve.context().degree();
  return twisted_product(coefficient_matrix(curve), TwistPower::sigma(e), e);
}

}  // namespace cartier
