#include "cartier/semilin.hpp"

#include <algorithm>
#include <ostream>

#include "cartier/error.hpp"

namespace cartier {

Matrix::Matrix(FieldContext ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  entries_.assign(rows * cols, ctx_.zero());
}

Matrix::Matrix(FieldContext ctx, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw DimensionError("expected " + std::to_string(rows * cols) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  for (const auto& x : entries_) {
    if (!(x.context() == ctx_)) throw ContextMismatch("matrix entry from another field");
  }
}

Matrix Matrix::identity(const FieldContext& ctx, std::size_t n) {
  Matrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
  return m;
}

Matrix Matrix::parse(const FieldContext& ctx, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty() || rows.front().empty()) throw ParseError("empty matrix");
  const std::size_t cols = rows.front().size();
  std::vector<Element> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw ParseError("ragged matrix rows");
    for (const auto& s : row) entries.push_back(ctx.parse(s));
  }
  return Matrix(ctx, rows.size(), cols, std::move(entries));
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Element& x) { return x.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::vector<std::vector<std::string>> Matrix::serialize() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("matrices over different fields");
  if (a.cols_ != b.rows_) {
    throw DimensionError("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                         " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Matrix c(a.ctx_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Element& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("matrices over different fields");
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

TwistPower::TwistPower(std::int64_t k, unsigned e) : e_(e) {
  if (e == 0) throw ValidationError("twist power needs a positive extension degree");
  const auto se = static_cast<std::int64_t>(e);
  std::int64_t r = k % se;
  if (r < 0) r += se;
  k_ = static_cast<unsigned>(r);
}

namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) {
    throw DimensionError(std::string(op) + " needs a square matrix, got " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()));
  }
}

void require_twist_degree(const Matrix& a, TwistPower t) {
  if (t.e() != a.context().degree()) {
    throw ContextMismatch("twist power over F_{p^" + std::to_string(t.e()) + "} applied to a matrix over F_{p^" +
                          std::to_string(a.context().degree()) + "}");
  }
}

// Row echelon form in place with first-nonzero-in-column pivoting. Returns the
// rank; `sign_flips` counts row swaps.
std::size_t echelon(Matrix& m, std::size_t& sign_flips) {
  std::size_t pivot_row = 0;
  sign_flips = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, col).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot_row, j));
      ++sign_flips;
    }
    const Element inv = m(pivot_row, col).inverse();
    for (std::size_t i = pivot_row + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const Element factor = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(pivot_row, j);
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

Matrix mul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix identity(const FieldContext& ctx, std::size_t n) { return Matrix::identity(ctx, n); }

Matrix apply_twist(const Matrix& a, TwistPower t) {
  require_twist_degree(a, t);
  if (t.k() == 0) return a;
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).frobenius_power(t.k());
  }
  return out;
}

Matrix twisted_product(const Matrix& a, TwistPower t, std::uint64_t r) {
  require_square(a, "twisted_product");
  require_twist_degree(a, t);
  if (r == 0) throw ValidationError("twisted_product needs r >= 1");
  Matrix acc = a;
  Matrix factor = a;
  for (std::uint64_t i = 1; i < r; ++i) {
    factor = apply_twist(factor, t);
    acc = acc * factor;
  }
  return acc;
}

Matrix change_basis(const Matrix& a, const Matrix& s, TwistPower t) {
  require_square(a, "change_basis");
  if (s.rows() != a.rows() || s.cols() != a.cols()) throw DimensionError("change_basis: shape mismatch");
  return inverse(s) * a * apply_twist(s, t);
}

TwistedMatrix adjoint(const Matrix& a, TwistPower t) {
  require_square(a, "adjoint");
  const TwistPower delta = t.inverse();
  return {apply_twist(a, delta).transpose(), delta};
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  std::size_t flips = 0;
  return echelon(m, flips);
}

Element det(const Matrix& a) {
  require_square(a, "det");
  Matrix m = a;
  std::size_t flips = 0;
  if (echelon(m, flips) < m.rows()) return a.context().zero();
  Element d = a.context().one();
  for (std::size_t i = 0; i < m.rows(); ++i) d *= m(i, i);
  return flips % 2 == 0 ? d : -d;
}

Matrix inverse(const Matrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(a.context(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = col;
    while (r < n && m(r, col).is_zero()) ++r;
    if (r == n) throw ArithmeticError("matrix is singular");
    if (r != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(r, j), m(col, j));
        std::swap(inv(r, j), inv(col, j));
      }
    }
    const Element pivot_inv = m(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= pivot_inv;
      inv(col, j) *= pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      const Element factor = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= factor * m(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

Polynomial char_poly(const Matrix& a) {
  require_square(a, "char_poly");
  const std::size_t n = a.rows();
  const FieldContext& ctx = a.context();
  Matrix h = a;

  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const Element pivot_inv = h(m, m - 1).inverse();
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h(r, m - 1).is_zero()) continue;
      const Element u = h(r, m - 1) * pivot_inv;
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) += u * h(j, r);
    }
  }

  // p_k = (T - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  const Polynomial t = Polynomial::monomial(ctx.one(), 1);
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.emplace_back(ctx, std::vector<Element>{ctx.one()});
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial next = (t - Polynomial(ctx, {h(k, k)})) * p[k];
    Element sub = ctx.one();
    for (std::size_t i = k; i-- > 0;) {
      sub *= h(i + 1, i);
      if (sub.is_zero()) break;
      next = next - p[i] * (h(i, k) * sub);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

Matrix matrix_power(const Matrix& a, std::uint64_t n) {
  require_square(a, "matrix_power");
  Matrix result = Matrix::identity(a.context(), a.rows());
  Matrix base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace cartier
