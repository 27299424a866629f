#pragma once

// Invariants of the p-torsion of the Jacobian and the zeta function mod p.
//
// For a curve over F_q, q = p^e, the e-fold iterates
//   M = A A^sigma ... A^(sigma^(e-1))   (Frobenius, F_q-linear)
//   N = B B^tau   ... B^(tau^(e-1))     (Cartier,   F_q-linear)
// are adjoint, and det(I - M T) = L(T) mod p.

#include <cstddef>

#include "cartier/curve.hpp"
#include "cartier/poly.hpp"
#include "cartier/semilin.hpp"

namespace cartier {

struct ModPZeta {
  Polynomial l_mod_p;    // over F_p, constant term 1, degree <= g
  Polynomial chi_mod_p;  // over F_p, degree 2g, T^(2g) * l_mod_p(1/T)
};

Matrix frobenius_iterate(const HyperellipticCurve& curve);
Matrix cartier_iterate(const HyperellipticCurve& curve);

// det(I - M T) over F_p. Throws InternalError if a coefficient falls outside
// the prime subfield.
Polynomial l_poly_mod_p(const HyperellipticCurve& curve);
// (-1)^g T^g det(M - T I) over F_p.
Polynomial chi_mod_p(const HyperellipticCurve& curve);
ModPZeta mod_p_zeta(const HyperellipticCurve& curve);

// rank(M^g); cross-checked against deg(l_poly_mod_p) and the (g*e)-fold
// twisted product of A. Throws InternalError on disagreement.
std::size_t p_rank(const HyperellipticCurve& curve);
// g - rank(B)
std::size_t a_number(const HyperellipticCurve& curve);
// B == 0
bool is_superspecial(const HyperellipticCurve& curve);

// Y Y^sigma ... Y^(sigma^(e-1)) with Y the untwisted coefficient matrix. This
// is the WRONG matrix for zeta purposes: Y represents the Cartier operator
// (after tau), not Frobenius, so its char poly is generally unrelated to L(T).
// Only for demonstrating the pitfall.
Matrix naive_yui_product(const HyperellipticCurve& curve);

}  // namespace cartier
