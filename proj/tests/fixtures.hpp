#pragma once

// Worked curves shared by the unit and acceptance suites.

#include <random>
#include <string>
#include <vector>

#include "cartier/curve.hpp"
#include "cartier/error.hpp"
#include "cartier/gf.hpp"
#include "cartier/poly.hpp"
#include "cartier/semilin.hpp"

namespace cartier::testing {

// F_125 with a^3 + 3a + 3 = 0.
inline FieldContext f125() { return FieldContext(5, {3, 3, 0, 1}); }
// F_27 with a^3 - a + 1 = 0.
inline FieldContext f27() { return FieldContext(3, {1, 2, 0, 1}); }
// F_9 with a^2 + 1 = 0, F_25 with a^2 - 2 = 0.
inline FieldContext f9() { return FieldContext(3, {1, 0, 1}); }
inline FieldContext f25() { return FieldContext(5, {3, 0, 1}); }

inline Element gpow(const FieldContext& ctx, std::uint64_t k) { return ctx.generator().pow(k); }

inline Matrix mat(const FieldContext& ctx, const std::vector<std::vector<std::string>>& rows) {
  return Matrix::parse(ctx, rows);
}

// y^2 = x^5 + x^4 + a^92 x^3 + a^18 x^2 + a^56 x over F_125.
inline HyperellipticCurve f125_curve() {
  const auto ctx = f125();
  return make_curve(ctx, Polynomial::parse(ctx, {"0", "g^56", "g^18", "g^92", "1", "1"}), 2);
}

// y^2 = x^5 + a^2 x^2 + a x over F_27.
inline HyperellipticCurve f27_curve() {
  const auto ctx = f27();
  return make_curve(ctx, Polynomial::parse(ctx, {"0", "g^1", "g^2", "0", "0", "1"}), 2);
}

// y^2 = x^3 + x over F_3.
inline HyperellipticCurve f3_elliptic() {
  const auto ctx = FieldContext::prime(3);
  return make_curve(ctx, Polynomial::parse(ctx, {"0", "1", "0", "1"}), 1);
}

inline Element random_element(const FieldContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, ctx.order() - 1);
  return ctx.element_at(dist(rng));
}

inline Element random_nonzero(const FieldContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1, ctx.order() - 1);
  return ctx.element_at(dist(rng));
}

inline Matrix random_matrix(const FieldContext& ctx, std::size_t n, std::mt19937_64& rng) {
  Matrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_element(ctx, rng);
  }
  return m;
}

inline Matrix random_invertible(const FieldContext& ctx, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(ctx, n, rng);
    if (!det(m).is_zero()) return m;
  }
}

// Random squarefree f of degree 2g+1 or 2g+2 (chosen at random).
inline HyperellipticCurve random_curve(const FieldContext& ctx, unsigned genus, std::mt19937_64& rng) {
  std::bernoulli_distribution even_degree(0.5);
  while (true) {
    const std::size_t deg = 2 * genus + 1 + (even_degree(rng) ? 1 : 0);
    std::vector<Element> c;
    for (std::size_t i = 0; i < deg; ++i) c.push_back(random_element(ctx, rng));
    c.push_back(random_nonzero(ctx, rng));
    Polynomial f(ctx, std::move(c));
    if (is_squarefree(f)) return make_curve(ctx, std::move(f), genus);
  }
}

}  // namespace cartier::testing
