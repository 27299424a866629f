#pragma once

// Arithmetic in F_q = F_p[x]/(modulus), q = p^e, p an odd prime.
//
// Elements are dense coefficient vectors in the power basis 1, a, ..., a^(e-1)
// where a is the class of x. The Frobenius automorphism sigma(z) = z^p and its
// inverse tau(z) = z^(p^(e-1)) are exposed directly because everything above
// this layer is semilinear.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cartier {

using Residue = std::uint64_t;

class Element;

class FieldContext {
 public:
  // `modulus` is monic of degree e over F_p, low-to-high. Throws
  // ValidationError on even or composite p, non-monic or reducible modulus.
  FieldContext(std::uint64_t p, std::vector<Residue> modulus);

  // F_p with modulus x, so elements are length-1 vectors.
  static FieldContext prime(std::uint64_t p);

  std::uint64_t characteristic() const noexcept;
  unsigned degree() const noexcept;
  std::uint64_t order() const noexcept;
  std::span<const Residue> modulus() const noexcept;

  Element zero() const;
  Element one() const;
  // The class of x; writes as g^1 in the element grammar.
  Element generator() const;
  Element from_int(std::int64_t value) const;
  // Reduces entries mod p; `coeffs` may be shorter than e (zero padded).
  Element from_coeffs(std::span<const Residue> coeffs) const;
  // The element whose base-p digits are the coefficients, index in [0, q).
  Element element_at(std::uint64_t index) const;

  // Grammar: `<int>` | `g^<k>` | `[c0,...,c_{e-1}]`. Throws ParseError.
  Element parse(std::string_view text) const;

  FieldContext prime_subfield() const;

  // Same p and modulus.
  bool operator==(const FieldContext& other) const noexcept;

 private:
  struct Data;
  explicit FieldContext(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;

  friend class Element;
};

class Element {
 public:
  const FieldContext& context() const noexcept { return ctx_; }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool in_prime_subfield() const noexcept;
  // Constant coefficient; throws ValidationError outside the prime subfield.
  Residue to_prime() const;

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);
  Element& operator/=(const Element& rhs);

  // Throws ArithmeticError on zero.
  Element inverse() const;
  // 0^0 = 1.
  Element pow(std::uint64_t n) const;
  Element frobenius() const;
  Element inv_frobenius() const;
  // sigma^k for any integer k (negative k means tau^|k|).
  Element frobenius_power(std::int64_t k) const;
  // Euler's criterion; zero counts as a square.
  bool is_square() const;

  // Canonical coefficient-list form, e.g. `[2,2,0]`.
  std::string to_string() const;

  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(Element lhs, const Element& rhs) { return lhs *= rhs; }
  friend Element operator/(Element lhs, const Element& rhs) { return lhs /= rhs; }
  // Throws ContextMismatch when the fields differ.
  friend bool operator==(const Element& lhs, const Element& rhs);

 private:
  friend class FieldContext;
  Element(FieldContext ctx, std::vector<Residue> coeffs)
      : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

  void require_same_field(const Element& other) const;

  FieldContext ctx_;
  std::vector<Residue> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Element& a);

inline Element pow(const Element& a, std::uint64_t n) { return a.pow(n); }
inline Element frobenius(const Element& a) { return a.frobenius(); }
inline Element inv_frobenius(const Element& a) { return a.inv_frobenius(); }
inline bool is_square(const Element& a) { return a.is_square(); }

bool is_prime(std::uint64_t n) noexcept;

// Irreducibility of a polynomial over F_p (coefficients low-to-high). Throws
// ValidationError for the zero polynomial.
bool is_irreducible(std::uint64_t p, std::span<const Residue> poly);

// First monic irreducible polynomial of degree d over F_p in lexicographic
// order of the lower coefficients (read as a base-p number). For d = 1 this
// is x itself.
std::vector<Residue> find_irreducible(std::uint64_t p, unsigned d);

}  // namespace cartier
