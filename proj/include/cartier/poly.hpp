#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cartier/gf.hpp"

namespace cartier {

// Dense univariate polynomial over F_q, coefficients low-to-high. Always
// normalized: the leading stored coefficient is nonzero and the zero
// polynomial has no coefficients.
class Polynomial {
 public:
  explicit Polynomial(FieldContext ctx);
  Polynomial(FieldContext ctx, std::vector<Element> coeffs);

  static Polynomial monomial(const Element& c, std::size_t degree);
  // From `<int>`/`g^k`/`[..]` strings, low-to-high.
  static Polynomial parse(const FieldContext& ctx, const std::vector<std::string>& coeffs);

  const FieldContext& context() const noexcept { return ctx_; }
  const std::vector<Element>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  // c_m; zero for m < 0 or m > degree.
  Element coefficient(std::int64_t m) const;
  Element leading() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Element& c);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial derivative() const;
  Polynomial power(std::uint64_t n) const;
  Element evaluate(const Element& x) const;
  Polynomial monic() const;
  // Coefficientwise sigma^k.
  Polynomial frobenius_power(std::int64_t k) const;
  // T^d * a(1/T) for d >= degree.
  Polynomial reversed(std::size_t d) const;

  // Sequence of canonical element strings, low-to-high.
  std::vector<std::string> serialize() const;

 private:
  void normalize();
  void require_same_field(const Polynomial& other) const;

  FieldContext ctx_;
  std::vector<Element> coeffs_;
};

// Quotient and remainder; throws ArithmeticError on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// gcd(a, a') constant and a not a p-th power. Throws ValidationError on zero.
bool is_squarefree(const Polynomial& a);

// Human-readable form such as `1 + T^2` or `T^4 + 2*T^3`, constants shown as
// integers when they lie in the prime subfield.
std::string format_polynomial(const Polynomial& a, const std::string& var = "T",
                              bool descending = false);
std::ostream& operator<<(std::ostream& os, const Polynomial& a);

// Coefficients of a polynomial over F_p as residues, low-to-high. Throws
// ValidationError if any coefficient lies outside the prime subfield.
std::vector<Residue> prime_coefficients(const Polynomial& a);

// Maps every coefficient into `target`, which must have the same p.
// Coefficients must already lie in the prime subfield.
Polynomial change_prime_field(const Polynomial& a, const FieldContext& target);

}  // namespace cartier
