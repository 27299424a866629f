#include <gtest/gtest.h>

#include <random>

#include "cartier/curve.hpp"
#include "cartier/error.hpp"
#include "fixtures.hpp"

using namespace cartier;
using namespace cartier::testing;

namespace {

// Y straight from the definition: c_(ip-j) of f^((p-1)/2), indices 1-based.
Matrix coefficient_oracle(const HyperellipticCurve& curve) {
  const FieldContext& ctx = curve.context();
  const std::uint64_t p = ctx.characteristic();
  Polynomial h(ctx, {ctx.one()});
  for (std::uint64_t i = 0; i < (p - 1) / 2; ++i) h = h * curve.f();
  const unsigned g = curve.genus();
  Matrix y(ctx, g, g);
  for (unsigned i = 1; i <= g; ++i) {
    for (unsigned j = 1; j <= g; ++j) {
      y(i - 1, j - 1) = h.coefficient(static_cast<std::int64_t>(i * p) - static_cast<std::int64_t>(j));
    }
  }
  return y;
}

}  // namespace

TEST(CurveTest, MakeCurveAcceptsWorkedExamples) {
  EXPECT_EQ(f125_curve().genus(), 2u);
  EXPECT_EQ(f27_curve().genus(), 2u);
  EXPECT_EQ(f3_elliptic().characteristic(), 3u);
}

TEST(CurveTest, MakeCurveRejects) {
  const auto f5 = FieldContext::prime(5);
  EXPECT_THROW(make_curve(f5, Polynomial::parse(f5, {"0", "0", "1"}), 1), ValidationError);
  // squarefree but degree 4 is not 2g+1 or 2g+2 for g = 2
  EXPECT_THROW(make_curve(f5, Polynomial::parse(f5, {"1", "0", "0", "0", "1"}), 2), ValidationError);
  // right degree, repeated root: x^2 (x^3 + 1)
  EXPECT_THROW(make_curve(f5, Polynomial::parse(f5, {"0", "0", "1", "0", "0", "1"}), 2), ValidationError);
  EXPECT_THROW(make_curve(f5, Polynomial::parse(f5, {"1", "1"}), 0), ValidationError);
  // degree 2g+2 is fine
  EXPECT_NO_THROW(make_curve(f5, Polynomial::parse(f5, {"1", "0", "0", "0", "1"}), 1));
}

TEST(CurveTest, CoefficientMatrixFixtures) {
  const auto k125 = f125();
  EXPECT_EQ(coefficient_matrix(f125_curve()), mat(k125, {{"g^41", "g^105"}, {"2", "g^95"}}));
  const auto k27 = f27();
  EXPECT_EQ(coefficient_matrix(f27_curve()), mat(k27, {{"g^2", "g^1"}, {"1", "0"}}));
  EXPECT_EQ(coefficient_matrix(f3_elliptic()), mat(FieldContext::prime(3), {{"0"}}));
}

TEST(CurveTest, CartierManinFixtures) {
  const auto k125 = f125();
  EXPECT_EQ(cartier_manin(f125_curve()), mat(k125, {{"g^33", "g^21"}, {"2", "g^19"}}));

  const auto k27 = f27();
  const Matrix b27 = cartier_manin(f27_curve());
  // tau(x) = x^9 on F_27
  EXPECT_EQ(b27, mat(k27, {{"g^18", "g^9"}, {"1", "0"}}));
  EXPECT_EQ(apply_twist(b27, TwistPower::sigma(3)), coefficient_matrix(f27_curve()));

  EXPECT_EQ(cartier_manin(f3_elliptic()), coefficient_matrix(f3_elliptic()));
}

TEST(CurveTest, HasseWittFixture) {
  const auto k125 = f125();
  EXPECT_EQ(hasse_witt(f125_curve()), mat(k125, {{"g^41", "2"}, {"g^105", "g^95"}}));
  const CartierData data = cartier_data(f125_curve());
  EXPECT_EQ(data.hasse_witt, data.coefficients.transpose());
}

TEST(CurveTest, MatricesAgreeWithDefinitionOnRandomCurves) {
  std::mt19937_64 rng(101);
  for (const auto& ctx : {FieldContext::prime(7), f9(), f25(), f27()}) {
    for (unsigned g = 1; g <= 3; ++g) {
      for (int trial = 0; trial < 5; ++trial) {
        const HyperellipticCurve c = random_curve(ctx, g, rng);
        const CartierData data = cartier_data(c);
        ASSERT_EQ(data.coefficients, coefficient_oracle(c));
        ASSERT_EQ(data.cartier_manin, apply_twist(data.coefficients, TwistPower::tau(ctx.degree())));
        // Hasse-Witt is the adjoint of Cartier-Manin.
        const TwistedMatrix adj = adjoint(data.cartier_manin, TwistPower::tau(ctx.degree()));
        ASSERT_EQ(adj.matrix, data.hasse_witt);
        ASSERT_EQ(adj.twist, TwistPower::sigma(ctx.degree()));
      }
    }
  }
}

TEST(CurveTest, IteratedCartierDirect) {
  const auto c = f125_curve();
  EXPECT_EQ(iterated_cartier_direct(c, 1), cartier_manin(c));
  EXPECT_TRUE(iterated_cartier_direct(c, 2).is_zero());
  EXPECT_THROW(iterated_cartier_direct(c, 0), ValidationError);
  EXPECT_THROW(iterated_cartier_direct(c, 3, 100), BoundExceeded);
}

TEST(CurveTest, IteratedCartierDirectMatchesTwistedProduct) {
  std::mt19937_64 rng(103);
  for (const auto& ctx : {FieldContext::prime(3), FieldContext::prime(5), f9()}) {
    const TwistPower tau = TwistPower::tau(ctx.degree());
    for (unsigned g = 1; g <= 2; ++g) {
      for (int trial = 0; trial < 6; ++trial) {
        const HyperellipticCurve c = random_curve(ctx, g, rng);
        const Matrix b = cartier_manin(c);
        for (unsigned n = 1; n <= 3; ++n) {
          ASSERT_EQ(iterated_cartier_direct(c, n), twisted_product(b, tau, n)) << c.f() << " n=" << n;
        }
      }
    }
  }
}

TEST(CurveTest, EvenDegreeModelReadsInsideThePower) {
  // deg f^((p-1)/2) = (p-1)(g+1) and the largest index read is gp - 1, which
  // stays inside the power when g <= p. Past that the reads are genuine zeros.
  std::mt19937_64 rng(107);
  for (const auto& ctx : {FieldContext::prime(3), FieldContext::prime(7), f25()}) {
    const std::uint64_t p = ctx.characteristic();
    for (unsigned g = 1; g <= 4; ++g) {
      HyperellipticCurve c = random_curve(ctx, g, rng);
      while (*c.f().degree() != 2 * g + 2) c = random_curve(ctx, g, rng);
      const Polynomial h = c.f().power((p - 1) / 2);
      ASSERT_EQ(*h.degree(), (p - 1) * (g + 1));
      if (g <= p) {
        ASSERT_LE(g * p - 1, *h.degree());
      } else {
        ASSERT_TRUE(h.coefficient(static_cast<std::int64_t>(g * p - 1)).is_zero());
      }
      ASSERT_EQ(coefficient_matrix(c), coefficient_oracle(c));
    }
  }
}
