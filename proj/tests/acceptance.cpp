// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cartier/cli.hpp"
#include "cartier/invariants.hpp"
#include "cartier/oracle.hpp"
#include "fixtures.hpp"

using namespace cartier;
using namespace cartier::testing;

namespace {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  template <typename T>
  void equal(const T& actual, const T& expected, const std::string& what) {
    ++checks_;
    if (!(actual == expected)) {
      std::ostringstream msg;
      msg << what << ": got " << actual << ", expected " << expected;
      failures_.push_back(msg.str());
    }
  }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

std::ostream& operator<<(std::ostream& os, const std::vector<std::int64_t>& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ']';
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 = no runtime limit
  std::function<void(Checker&)> body;
};

bool run(const Criterion& c) {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
    check.expect(false, "runtime " + std::to_string(secs) + " s over the " +
                            std::to_string(c.limit_seconds) + " s limit");
  }
  const bool ok = check.failures().empty();
  std::printf("%s  criterion %d: %s  (%zu checks, %.3f s)\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(),
              check.checks(), secs);
  for (const auto& f : check.failures()) std::printf("      %s\n", f.c_str());
  return ok;
}

void criterion1(Checker& check) {
  const auto ctx = f125();
  const HyperellipticCurve c = f125_curve();
  const Matrix y = coefficient_matrix(c);
  check.equal(y, mat(ctx, {{"g^41", "g^105"}, {"2", "g^95"}}), "Y");
  const Matrix yy = twisted_product(y, TwistPower::sigma(3), 2);
  check.equal(yy, mat(ctx, {{"g^32", "g^104"}, {"g^22", "g^94"}}), "Y Y^sigma");
  check.equal(rank(yy), std::size_t{1}, "rank(Y Y^sigma)");
  const Matrix b = cartier_manin(c);
  check.equal(b, mat(ctx, {{"g^33", "g^21"}, {"2", "g^19"}}), "B");
  check.equal(hasse_witt(c), mat(ctx, {{"g^41", "2"}, {"g^105", "g^95"}}), "A");
  check.expect(twisted_product(b, TwistPower::tau(3), 2).is_zero(), "B B^tau = 0");
  check.equal(p_rank(c), std::size_t{0}, "p-rank");
}

void criterion2(Checker& check) {
  const auto ctx = f27();
  const HyperellipticCurve c = f27_curve();
  check.equal(coefficient_matrix(c), mat(ctx, {{"g^2", "g^1"}, {"1", "0"}}), "Y");
  check.equal(char_poly(naive_yui_product(c)), Polynomial::parse(ctx, {"1", "1", "1"}), "naive char poly");
  const auto f3 = FieldContext::prime(3);
  check.equal(chi_mod_p(c), Polynomial::parse(f3, {"0", "0", "1", "0", "1"}), "chi mod 3");
  check.equal(l_poly_mod_p(c), Polynomial::parse(f3, {"1", "0", "1"}), "L mod 3");
  const Report r = pitfall_report(CurveSpec{}, c);
  check.expect(r.pitfall.has_value() && r.pitfall->differ, "pitfall verdict DIFFER");
}

void criterion3(Checker& check) {
  const HyperellipticCurve c125 = f125_curve();
  const ExactLPoly l125 = l_polynomial_exact(c125);
  check.equal(l125.coeffs, std::vector<std::int64_t>{1, 0, 250, 0, 15625}, "exact L over F_125");
  check.equal(l125.reduce(FieldContext::prime(5)), l_poly_mod_p(c125), "F_125: exact L mod 5 vs matrix side");

  const HyperellipticCurve c27 = f27_curve();
  const ExactLPoly l27 = l_polynomial_exact(c27);
  check.equal(l27.coeffs, std::vector<std::int64_t>{1, 6, 52, 162, 729}, "exact L over F_27");
  check.equal(l27.reduce(FieldContext::prime(3)), l_poly_mod_p(c27), "F_27: exact L mod 3 vs matrix side");
}

void criterion4(Checker& check) {
  std::mt19937_64 rng(20240601);
  const std::vector<FieldContext> fields = {FieldContext::prime(3), FieldContext::prime(5), FieldContext::prime(7),
                                            f9(), f25(), f27()};
  std::size_t curves = 0;
  for (int round = 0; round < 5; ++round) {
    for (const auto& ctx : fields) {
      for (unsigned g = 1; g <= 2; ++g) {
        const HyperellipticCurve c = random_curve(ctx, g, rng);
        std::ostringstream id;
        id << "q=" << ctx.order() << " g=" << g << " f=" << c.f();
        const ExactLPoly exact = l_polynomial_exact(c);
        check.equal(l_poly_mod_p(c), exact.reduce(ctx.prime_subfield()), id.str() + " L mod p");
        check.equal(p_rank(c), p_rank_oracle(c), id.str() + " p-rank");
        check.equal(char_poly(frobenius_iterate(c)), char_poly(cartier_iterate(c)), id.str() + " char polys");
        ++curves;
      }
    }
  }
  check.expect(curves >= 50, "at least 50 curves");
}

TwistPower random_twist(unsigned e, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> k(0, e - 1);
  return {static_cast<std::int64_t>(k(rng)), e};
}

void criterion5(Checker& check) {
  std::mt19937_64 rng(515);
  const std::vector<FieldContext> fields = {f125(), f27(), f9(), f25(), FieldContext::prime(7)};
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uniform_int_distribution<std::size_t> pick(0, fields.size() - 1);
  constexpr int kCases = 120;

  // adjoint involution
  for (int i = 0; i < kCases; ++i) {
    const FieldContext& ctx = fields[pick(rng)];
    const Matrix a = random_matrix(ctx, dim(rng), rng);
    const TwistPower t = random_twist(ctx.degree(), rng);
    const TwistedMatrix once = adjoint(a, t);
    const TwistedMatrix twice = adjoint(once.matrix, once.twist);
    check.expect(twice.matrix == a && twice.twist == t, "adjoint involution");
  }

  // composition law, r + s <= 5
  std::uniform_int_distribution<std::uint64_t> rs(1, 4);
  for (int i = 0; i < kCases; ++i) {
    const FieldContext& ctx = fields[pick(rng)];
    const Matrix a = random_matrix(ctx, dim(rng), rng);
    const TwistPower t = random_twist(ctx.degree(), rng);
    const std::uint64_t r = rs(rng);
    std::uniform_int_distribution<std::uint64_t> sdist(1, 5 - r);
    const std::uint64_t s = sdist(rng);
    const Matrix lhs = twisted_product(a, t, r + s);
    const Matrix rhs =
        twisted_product(a, t, r) * apply_twist(twisted_product(a, t, s), t.times(static_cast<std::int64_t>(r)));
    check.expect(lhs == rhs, "composition law");
  }

  // rank invariance under twisted change of basis
  for (int i = 0; i < kCases; ++i) {
    const FieldContext& ctx = fields[pick(rng)];
    const std::size_t n = dim(rng);
    Matrix a = random_matrix(ctx, n, rng) * random_matrix(ctx, n, rng);
    if (n > 1 && i % 2 == 0) a(n - 1, n - 1) = ctx.zero();
    const Matrix s = random_invertible(ctx, n, rng);
    const TwistPower t = random_twist(ctx.degree(), rng);
    const std::uint64_t r = rs(rng);
    check.expect(rank(twisted_product(change_basis(a, s, t), t, r)) == rank(twisted_product(a, t, r)),
                 "rank invariance");
  }

  // sigma / tau round trips
  for (int i = 0; i < kCases; ++i) {
    const FieldContext& ctx = fields[pick(rng)];
    const Element x = random_element(ctx, rng);
    check.expect(x.frobenius().inv_frobenius() == x && x.inv_frobenius().frobenius() == x, "sigma/tau round trip");
    const Matrix a = random_matrix(ctx, 2, rng);
    check.expect(apply_twist(apply_twist(a, TwistPower::sigma(ctx.degree())), TwistPower::tau(ctx.degree())) == a,
                 "matrix sigma/tau round trip");
  }

  // direct n-th iterate vs twisted product of B, n <= 3
  const std::vector<FieldContext> small = {FieldContext::prime(3), FieldContext::prime(5), f9()};
  std::uniform_int_distribution<std::size_t> pick_small(0, small.size() - 1);
  std::uniform_int_distribution<unsigned> genus(1, 2);
  std::uniform_int_distribution<unsigned> iterate(1, 3);
  for (int i = 0; i < kCases; ++i) {
    const FieldContext& ctx = small[pick_small(rng)];
    const HyperellipticCurve c = random_curve(ctx, genus(rng), rng);
    const unsigned n = iterate(rng);
    check.expect(iterated_cartier_direct(c, n) == twisted_product(cartier_manin(c), TwistPower::tau(ctx.degree()), n),
                 "direct iterate");
  }
}

void criterion6(Checker& check) {
  const HyperellipticCurve c = f125_curve();
  check.expect(!is_superspecial(c), "F_125 curve is not superspecial");
  check.equal(p_rank(c), std::size_t{0}, "p-rank");
  check.equal(l_polynomial_exact(c).coeffs, std::vector<std::int64_t>{1, 0, 250, 0, 15625}, "oracle L");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "F_125 worked example: Y, Y Y^sigma, B, A, B B^tau, p-rank", 1.0, criterion1},
      {2, "F_27 example: Y, naive char poly, chi and L mod 3, pitfall verdict", 1.0, criterion2},
      {3, "exact L-polynomials from point counts reduce to the matrix side", 10.0, criterion3},
      {4, "randomized congruence suite (60 curves)", 120.0, criterion4},
      {5, "semilinear property suites (120 cases each)", 0.0, criterion5},
      {6, "supersingular but not superspecial", 0.0, criterion6},
  };
  bool all = true;
  for (const auto& c : criteria) all = run(c) && all;
  std::printf("%s\n", all ? "all criteria passed" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
