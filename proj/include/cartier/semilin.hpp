#pragma once

// Matrices over F_q and the semilinear operations on them.
//
// Convention: matrices act on the LEFT of column vectors, everywhere. If f is
// eps-linear with f(v_j) = sum_i a_ij v_i, then [f(v)] = [f] * [v]^eps and the
// r-fold iterate is [f] [f]^eps [f]^(eps^2) ... [f]^(eps^(r-1)). There is no
// right-action code path; transpose explicitly if you need one.

#include <cstdint>
#include <string>
#include <vector>

#include "cartier/gf.hpp"
#include "cartier/poly.hpp"

namespace cartier {

class Matrix {
 public:
  // Zero matrix.
  Matrix(FieldContext ctx, std::size_t rows, std::size_t cols);
  // `entries` is row-major with rows * cols elements.
  Matrix(FieldContext ctx, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static Matrix identity(const FieldContext& ctx, std::size_t n);
  // Row-major nested element strings.
  static Matrix parse(const FieldContext& ctx, const std::vector<std::vector<std::string>>& rows);

  const FieldContext& context() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const noexcept;

  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  Matrix transpose() const;
  std::vector<std::vector<std::string>> serialize() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldContext ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// The automorphism sigma^k of F_{p^e}, k reduced mod e. tau = sigma^(e-1).
class TwistPower {
 public:
  TwistPower(std::int64_t k, unsigned e);

  static TwistPower identity(unsigned e) { return {0, e}; }
  static TwistPower sigma(unsigned e) { return {1, e}; }
  static TwistPower tau(unsigned e) { return {-1, e}; }

  unsigned k() const noexcept { return k_; }
  unsigned e() const noexcept { return e_; }
  TwistPower inverse() const { return {-static_cast<std::int64_t>(k_), e_}; }
  // sigma^(k*r)
  TwistPower times(std::int64_t r) const { return {static_cast<std::int64_t>(k_) * r, e_}; }

  friend bool operator==(const TwistPower&, const TwistPower&) = default;

 private:
  unsigned k_;
  unsigned e_;
};

struct TwistedMatrix {
  Matrix matrix;
  TwistPower twist;

  friend bool operator==(const TwistedMatrix&, const TwistedMatrix&) = default;
};

Matrix mul(const Matrix& a, const Matrix& b);
Matrix identity(const FieldContext& ctx, std::size_t n);

// Entrywise sigma^k.
Matrix apply_twist(const Matrix& a, TwistPower t);

// A * A^t * A^(t^2) * ... * A^(t^(r-1)): the matrix of the r-fold iterate of
// the t-linear operator represented by A. Requires square A and r >= 1.
Matrix twisted_product(const Matrix& a, TwistPower t, std::uint64_t r);

// S^-1 * A * S^t: the same t-linear operator in the basis given by the
// columns of S. Throws ArithmeticError when S is singular.
Matrix change_basis(const Matrix& a, const Matrix& s, TwistPower t);

// ((A^d)^T, d) with d = t^-1: the matrix of the adjoint operator in the dual
// basis. An involution.
TwistedMatrix adjoint(const Matrix& a, TwistPower t);

std::size_t rank(const Matrix& a);
Element det(const Matrix& a);
// Throws ArithmeticError when singular.
Matrix inverse(const Matrix& a);
// Monic det(T*I - A) over the field of A, computed by Hessenberg reduction.
Polynomial char_poly(const Matrix& a);
// Ordinary (untwisted) power, A^0 = I.
Matrix matrix_power(const Matrix& a, std::uint64_t n);

}  // namespace cartier
