#pragma once

// Hyperelliptic curves y^2 = f(x) over F_q, p odd, and their Cartier-Manin /
// Hasse-Witt matrices in the basis w_i = x^(i-1) dx/y, i = 1..g.
//
// With c_m the coefficient of x^m in f^((p-1)/2):
//   Y (coefficient matrix)  Y_ij = c_(ip-j)           untwisted, no operator
//   B (Cartier-Manin)       B_ij = tau(c_(ip-j))      tau-linear Cartier operator
//   A (Hasse-Witt)          A    = (B^sigma)^T = Y^T  sigma-linear Frobenius on H^1(O)
// All three act on the left of column vectors.

#include <cstdint>

#include "cartier/gf.hpp"
#include "cartier/poly.hpp"
#include "cartier/semilin.hpp"

namespace cartier {

class HyperellipticCurve {
 public:
  const FieldContext& context() const noexcept { return f_.context(); }
  const Polynomial& f() const noexcept { return f_; }
  unsigned genus() const noexcept { return genus_; }
  std::uint64_t characteristic() const noexcept { return context().characteristic(); }

 private:
  friend HyperellipticCurve make_curve(const FieldContext&, Polynomial, unsigned);
  HyperellipticCurve(Polynomial f, unsigned genus) : f_(std::move(f)), genus_(genus) {}

  Polynomial f_;
  unsigned genus_;
};

// Throws ValidationError unless g >= 1, deg f is 2g+1 or 2g+2 and f is
// squarefree. Odd characteristic is guaranteed by FieldContext.
HyperellipticCurve make_curve(const FieldContext& ctx, Polynomial f, unsigned genus);

struct CartierData {
  Matrix coefficients;  // Y
  Matrix cartier_manin;  // B
  Matrix hasse_witt;  // A
};

Matrix coefficient_matrix(const HyperellipticCurve& curve);
Matrix cartier_manin(const HyperellipticCurve& curve);
Matrix hasse_witt(const HyperellipticCurve& curve);
CartierData cartier_data(const HyperellipticCurve& curve);

// Default guard on (p^n - 1)/2 * deg f for iterated_cartier_direct.
inline constexpr std::uint64_t kDefaultPowerDegreeBound = 20000;

// Matrix of the n-th iterate of the Cartier operator read off directly from
// f^((p^n-1)/2): entry (i,j) is the p^n-th root of the coefficient of
// x^(i p^n - j). Throws BoundExceeded when the powered degree is over `bound`.
Matrix iterated_cartier_direct(const HyperellipticCurve& curve, unsigned n,
                               std::uint64_t bound = kDefaultPowerDegreeBound);

}  // namespace cartier
