#include "cartier/poly.hpp"

#include <algorithm>
#include <sstream>

#include "cartier/error.hpp"

namespace cartier {

Polynomial::Polynomial(FieldContext ctx) : ctx_(std::move(ctx)) {}

Polynomial::Polynomial(FieldContext ctx, std::vector<Element> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.context() == ctx_)) throw ContextMismatch("polynomial coefficient from another field");
  }
  normalize();
}

Polynomial Polynomial::monomial(const Element& c, std::size_t degree) {
  std::vector<Element> coeffs(degree + 1, c.context().zero());
  coeffs[degree] = c;
  return Polynomial(c.context(), std::move(coeffs));
}

Polynomial Polynomial::parse(const FieldContext& ctx, const std::vector<std::string>& coeffs) {
  std::vector<Element> elems;
  elems.reserve(coeffs.size());
  for (const auto& s : coeffs) elems.push_back(ctx.parse(s));
  return Polynomial(ctx, std::move(elems));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::require_same_field(const Polynomial& other) const {
  if (!(ctx_ == other.ctx_)) throw ContextMismatch("polynomials over different fields");
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Element Polynomial::coefficient(std::int64_t m) const {
  if (m < 0 || static_cast<std::uint64_t>(m) >= coeffs_.size()) return ctx_.zero();
  return coeffs_[static_cast<std::size_t>(m)];
}

Element Polynomial::leading() const {
  if (coeffs_.empty()) return ctx_.zero();
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  std::vector<Element> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(-x);
  return Polynomial(ctx_, std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.require_same_field(b);
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<Element> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.push_back(a.coefficient(static_cast<std::int64_t>(i)) +
                b.coefficient(static_cast<std::int64_t>(i)));
  }
  return Polynomial(a.ctx_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_field(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ctx_);
  std::vector<Element> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.ctx_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(a.ctx_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Element& s) {
  std::vector<Element> c;
  c.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) c.push_back(x * s);
  return Polynomial(a.ctx_, std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.require_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(ctx_);
  std::vector<Element> c;
  c.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    c.push_back(coeffs_[i] * ctx_.from_int(static_cast<std::int64_t>(i % ctx_.characteristic())));
  }
  return Polynomial(ctx_, std::move(c));
}

Polynomial Polynomial::power(std::uint64_t n) const {
  Polynomial result(ctx_, {ctx_.one()});
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Element Polynomial::evaluate(const Element& x) const {
  if (!(x.context() == ctx_)) throw ContextMismatch("evaluation point from another field");
  Element acc = ctx_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::frobenius_power(std::int64_t k) const {
  std::vector<Element> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(x.frobenius_power(k));
  return Polynomial(ctx_, std::move(c));
}

Polynomial Polynomial::reversed(std::size_t d) const {
  if (coeffs_.size() > d + 1) throw ValidationError("reversed: degree exceeds target");
  std::vector<Element> c(d + 1, ctx_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[d - i] = coeffs_[i];
  return Polynomial(ctx_, std::move(c));
}

std::vector<std::string> Polynomial::serialize() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_string());
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (!(a.context() == b.context())) throw ContextMismatch("polynomials over different fields");
  const auto& ctx = a.context();
  std::vector<Element> rem = a.coeffs();
  const std::size_t db = *b.degree();
  if (rem.size() <= db) return {Polynomial(ctx), a};
  std::vector<Element> quot(rem.size() - db, ctx.zero());
  const Element lead_inv = b.leading().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    const Element factor = rem[k] * lead_inv;
    if (factor.is_zero()) continue;
    quot[k - db] = factor;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= factor * b.coeffs()[i];
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
  return {Polynomial(ctx, std::move(quot)), Polynomial(ctx, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

bool is_squarefree(const Polynomial& a) {
  if (a.is_zero()) throw ValidationError("is_squarefree: zero polynomial");
  if (*a.degree() == 0) return true;
  const Polynomial d = a.derivative();
  // a' = 0 means a is a p-th power of positive degree.
  if (d.is_zero()) return false;
  return *gcd(a, d).degree() == 0;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& a) { return os << format_polynomial(a, "x", true); }

std::string format_polynomial(const Polynomial& a, const std::string& var, bool descending) {
  if (a.is_zero()) return "0";
  std::vector<std::string> terms;
  const std::size_t n = a.coeffs().size();
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = descending ? n - 1 - step : step;
    const Element& c = a.coeffs()[i];
    if (c.is_zero()) continue;
    std::string coeff = c.in_prime_subfield() ? std::to_string(c.to_prime()) : c.to_string();
    std::string mono;
    if (i == 1) mono = var;
    if (i > 1) mono = var + "^" + std::to_string(i);
    if (mono.empty()) {
      terms.push_back(coeff);
    } else if (c.is_one()) {
      terms.push_back(mono);
    } else {
      terms.push_back(coeff + "*" + mono);
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out << " + ";
    out << terms[i];
  }
  return out.str();
}

std::vector<Residue> prime_coefficients(const Polynomial& a) {
  std::vector<Residue> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(c.to_prime());
  return out;
}

Polynomial change_prime_field(const Polynomial& a, const FieldContext& target) {
  if (a.context().characteristic() != target.characteristic()) {
    throw ContextMismatch("change_prime_field: characteristics differ");
  }
  std::vector<Element> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back(target.from_int(static_cast<std::int64_t>(x.to_prime())));
  return Polynomial(target, std::move(c));
}

}  // namespace cartier
