#pragma once

// Brute-force ground truth. Counts points of the smooth model of y^2 = f(x)
// over F_(q^k) by enumerating every x, then rebuilds the exact L-polynomial
// from N_1..N_g with Newton's identities and the functional equation.
// Deliberately naive: nothing here shares code with the matrix side beyond
// field and polynomial arithmetic.

#include <cstdint>
#include <string>
#include <vector>

#include "cartier/curve.hpp"
#include "cartier/gf.hpp"
#include "cartier/poly.hpp"

namespace cartier {

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

struct PointCounts {
  std::vector<std::uint64_t> counts;  // N_1, N_2, ...
};

struct ExactLPoly {
  std::vector<std::int64_t> coeffs;  // b_0 .. b_2g
  std::uint64_t q;

  // Low-to-high residues in [0, p).
  std::vector<Residue> mod_p(std::uint64_t p) const;
  Polynomial reduce(const FieldContext& prime_field) const;
  std::string to_string() const;

  friend bool operator==(const ExactLPoly&, const ExactLPoly&) = default;
};

// F_q inside F_(q^k): a fresh field of degree e*k over F_p with the class of
// x in F_q sent to a root of the F_q modulus, found by search.
class FieldEmbedding {
 public:
  FieldEmbedding(const FieldContext& base, unsigned k);

  const FieldContext& target() const noexcept { return target_; }
  Element operator()(const Element& a) const;
  Polynomial operator()(const Polynomial& a) const;

 private:
  FieldContext base_;
  FieldContext target_;
  std::vector<Element> basis_images_;  // images of 1, a, ..., a^(e-1)
};

// Projective points of the smooth model over F_(q^k). Throws BoundExceeded
// when q^k > bound.
std::uint64_t count_points(const HyperellipticCurve& curve, unsigned k,
                           std::uint64_t bound = kDefaultEnumerationBound);
PointCounts point_counts(const HyperellipticCurve& curve, unsigned up_to,
                         std::uint64_t bound = kDefaultEnumerationBound);

// Power sums S_k = q^k + 1 - N_k, then b_k from Newton's identities for
// k <= g and b_(2g-i) = q^(g-i) b_i. Throws InternalError on a Weil-bound
// violation or a non-integral Newton step.
ExactLPoly l_polynomial_exact(const HyperellipticCurve& curve,
                              std::uint64_t bound = kDefaultEnumerationBound);
ExactLPoly l_polynomial_from_counts(const PointCounts& counts, std::uint64_t q, unsigned genus);

// Degree of the exact L-polynomial reduced mod p.
std::size_t p_rank_oracle(const HyperellipticCurve& curve,
                          std::uint64_t bound = kDefaultEnumerationBound);

// b_(g+1) from Newton's identities on N_1..N_(g+1) against q * b_(g-1) from
// the functional equation. Needs q^(g+1) <= bound.
struct OverdeterminationCheck {
  std::int64_t from_counts;
  std::int64_t from_functional_equation;
};
OverdeterminationCheck functional_equation_check(const HyperellipticCurve& curve,
                                                 std::uint64_t bound = kDefaultEnumerationBound);

// f(u x + v).
Polynomial affine_substitute(const Polynomial& f, const Element& u, const Element& v);

}  // namespace cartier
