#include "cartier/gf.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "cartier/error.hpp"

namespace cartier {

namespace {

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 31;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;

Residue mul_mod(Residue a, Residue b, std::uint64_t p) { return (a * b) % p; }

Residue pow_mod(Residue a, std::uint64_t n, std::uint64_t p) {
  Residue result = 1 % p;
  a %= p;
  while (n > 0) {
    if (n & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    n >>= 1;
  }
  return result;
}

Residue inv_mod(Residue a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// Dense F_p[x] helpers used for modulus validation. Vectors are low-to-high
// and kept trimmed (no trailing zeros; zero polynomial is empty).
namespace fpx {

using Poly = std::vector<Residue>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly rem(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Residue lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const Residue factor = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mul_mod(factor, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  return rem(std::move(prod), m, p);
}

Poly powmod(Poly base, std::uint64_t n, const Poly& m, std::uint64_t p) {
  Poly result = rem(Poly{1}, m, p);
  base = rem(std::move(base), m, p);
  while (n > 0) {
    if (n & 1) result = mulmod(result, base, m, p);
    base = mulmod(base, base, m, p);
    n >>= 1;
  }
  return result;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace fpx

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint64_t p, std::span<const Residue> poly) {
  fpx::Poly m(poly.begin(), poly.end());
  for (auto& c : m) c %= p;
  fpx::trim(m);
  if (m.empty()) throw ValidationError("is_irreducible: zero polynomial");
  const std::size_t n = m.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  // Ben-Or: m is irreducible iff gcd(x^(p^i) - x, m) = 1 for i <= n/2.
  fpx::Poly h{0, 1};
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = fpx::powmod(h, p, m, p);
    fpx::Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (fpx::gcd(diff, m, p).size() > 1) return false;
  }
  return true;
}

std::vector<Residue> find_irreducible(std::uint64_t p, unsigned d) {
  if (d == 0) throw ValidationError("find_irreducible: degree must be positive");
  std::vector<Residue> candidate(d + 1, 0);
  candidate[d] = 1;
  while (true) {
    if (is_irreducible(p, candidate)) return candidate;
    std::size_t i = 0;
    while (i < d && ++candidate[i] == p) candidate[i++] = 0;
    if (i == d) throw InternalError("find_irreducible: exhausted candidates");
  }
}

// ---------------------------------------------------------------------------
// FieldContext

struct FieldContext::Data {
  std::uint64_t p;
  unsigned e;
  std::uint64_t q;
  std::vector<Residue> modulus;
};

FieldContext::FieldContext(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

FieldContext::FieldContext(std::uint64_t p, std::vector<Residue> modulus) {
  if (p == 2) {
    throw ValidationError("characteristic 2 is not supported: p must be an odd prime");
  }
  if (!is_prime(p)) {
    throw ValidationError("p = " + std::to_string(p) + " is not an odd prime");
  }
  if (p >= kMaxCharacteristic) {
    throw ValidationError("p = " + std::to_string(p) + " is too large");
  }
  for (auto& c : modulus) c %= p;
  if (modulus.size() < 2) {
    throw ValidationError("modulus must have degree at least 1");
  }
  if (modulus.back() != 1) {
    throw ValidationError("modulus must be monic");
  }
  if (!is_irreducible(p, modulus)) {
    throw ValidationError("modulus is not irreducible over F_" + std::to_string(p));
  }
  const auto e = static_cast<unsigned>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > kMaxOrder / p) {
      throw ValidationError("field order p^e is too large");
    }
    q *= p;
  }
  data_ = std::make_shared<const Data>(Data{p, e, q, std::move(modulus)});
}

FieldContext FieldContext::prime(std::uint64_t p) { return FieldContext(p, {0, 1}); }

std::uint64_t FieldContext::characteristic() const noexcept { return data_->p; }
unsigned FieldContext::degree() const noexcept { return data_->e; }
std::uint64_t FieldContext::order() const noexcept { return data_->q; }
std::span<const Residue> FieldContext::modulus() const noexcept { return data_->modulus; }

Element FieldContext::zero() const { return Element(*this, std::vector<Residue>(data_->e, 0)); }

Element FieldContext::one() const {
  std::vector<Residue> c(data_->e, 0);
  c[0] = 1;
  return Element(*this, std::move(c));
}

Element FieldContext::generator() const {
  if (data_->e == 1) {
    // x mod x
    return zero();
  }
  std::vector<Residue> c(data_->e, 0);
  c[1] = 1;
  return Element(*this, std::move(c));
}

Element FieldContext::from_int(std::int64_t value) const {
  const auto p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  std::vector<Residue> c(data_->e, 0);
  c[0] = static_cast<Residue>(r);
  return Element(*this, std::move(c));
}

Element FieldContext::from_coeffs(std::span<const Residue> coeffs) const {
  if (coeffs.size() > data_->e) {
    throw ValidationError("from_coeffs: more than e coefficients");
  }
  std::vector<Residue> c(data_->e, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] % data_->p;
  return Element(*this, std::move(c));
}

Element FieldContext::element_at(std::uint64_t index) const {
  if (index >= data_->q) throw ValidationError("element_at: index out of range");
  std::vector<Residue> c(data_->e, 0);
  for (unsigned i = 0; i < data_->e; ++i) {
    c[i] = index % data_->p;
    index /= data_->p;
  }
  return Element(*this, std::move(c));
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_integer(std::string_view s, std::string_view whole) {
  s = strip(s);
  std::int64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("invalid field element '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Element FieldContext::parse(std::string_view text) const {
  const std::string_view s = strip(text);
  if (s.empty()) throw ParseError("empty field element");
  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated coefficient list '" + std::string(s) + "'");
    std::string_view body = s.substr(1, s.size() - 2);
    std::vector<Residue> coeffs;
    const auto p = static_cast<std::int64_t>(data_->p);
    while (true) {
      const auto comma = body.find(',');
      std::int64_t v = parse_integer(body.substr(0, comma), s) % p;
      if (v < 0) v += p;
      coeffs.push_back(static_cast<Residue>(v));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    if (coeffs.size() != data_->e) {
      throw ParseError("coefficient list '" + std::string(s) + "' must have exactly " +
                       std::to_string(data_->e) + " entries");
    }
    return Element(*this, std::move(coeffs));
  }
  if (s.size() >= 2 && s[0] == 'g' && s[1] == '^') {
    const std::int64_t k = parse_integer(s.substr(2), s);
    if (k < 0) throw ParseError("negative exponent in '" + std::string(s) + "'");
    return generator().pow(static_cast<std::uint64_t>(k));
  }
  return from_int(parse_integer(s, s));
}

FieldContext FieldContext::prime_subfield() const {
  if (data_->e == 1) return *this;
  return FieldContext(std::make_shared<const Data>(Data{data_->p, 1, data_->p, {0, 1}}));
}

bool FieldContext::operator==(const FieldContext& other) const noexcept {
  return data_ == other.data_ ||
         (data_->p == other.data_->p && data_->modulus == other.data_->modulus);
}

// ---------------------------------------------------------------------------
// Element

void Element::require_same_field(const Element& other) const {
  if (!(ctx_ == other.ctx_)) {
    throw ContextMismatch("operands belong to different fields");
  }
}

bool Element::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

bool Element::is_one() const noexcept {
  return coeffs_[0] == 1 &&
         std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Residue c) { return c == 0; });
}

bool Element::in_prime_subfield() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Residue c) { return c == 0; });
}

Residue Element::to_prime() const {
  if (!in_prime_subfield()) {
    throw ValidationError("element " + to_string() + " is not in the prime subfield");
  }
  return coeffs_[0];
}

Element Element::operator-() const {
  const std::uint64_t p = ctx_.characteristic();
  std::vector<Residue> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] == 0 ? 0 : p - coeffs_[i];
  return Element(ctx_, std::move(c));
}

Element& Element::operator+=(const Element& rhs) {
  require_same_field(rhs);
  const std::uint64_t p = ctx_.characteristic();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
    if (coeffs_[i] >= p) coeffs_[i] -= p;
  }
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same_field(rhs);
  const std::uint64_t p = ctx_.characteristic();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = coeffs_[i] >= rhs.coeffs_[i] ? coeffs_[i] - rhs.coeffs_[i]
                                              : coeffs_[i] + p - rhs.coeffs_[i];
  }
  return *this;
}

Element& Element::operator*=(const Element& rhs) {
  require_same_field(rhs);
  const std::uint64_t p = ctx_.characteristic();
  const std::size_t e = coeffs_.size();
  if (e == 1) {
    coeffs_[0] = mul_mod(coeffs_[0], rhs.coeffs_[0], p);
    return *this;
  }
  std::vector<Residue> prod(2 * e - 1, 0);
  for (std::size_t i = 0; i < e; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) {
      prod[i + j] = (prod[i + j] + mul_mod(coeffs_[i], rhs.coeffs_[j], p)) % p;
    }
  }
  // Monic modulus: x^e = -(m_0 + ... + m_{e-1} x^{e-1}).
  const auto m = ctx_.modulus();
  for (std::size_t k = prod.size() - 1; k >= e; --k) {
    const Residue top = prod[k];
    if (top == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < e; ++i) {
      prod[k - e + i] = (prod[k - e + i] + p - mul_mod(top, m[i], p)) % p;
    }
  }
  std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(e), coeffs_.begin());
  return *this;
}

Element& Element::operator/=(const Element& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Element Element::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in F_" + std::to_string(ctx_.order()));
  return pow(ctx_.order() - 2);
}

Element Element::pow(std::uint64_t n) const {
  Element result = ctx_.one();
  Element base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Element Element::frobenius() const {
  if (ctx_.degree() == 1) return *this;
  return pow(ctx_.characteristic());
}

Element Element::inv_frobenius() const {
  Element result = *this;
  for (unsigned i = 1; i < ctx_.degree(); ++i) result = result.frobenius();
  return result;
}

Element Element::frobenius_power(std::int64_t k) const {
  const auto e = static_cast<std::int64_t>(ctx_.degree());
  std::int64_t r = k % e;
  if (r < 0) r += e;
  Element result = *this;
  for (std::int64_t i = 0; i < r; ++i) result = result.frobenius();
  return result;
}

bool Element::is_square() const {
  if (is_zero()) return true;
  return pow((ctx_.order() - 1) / 2).is_one();
}

std::string Element::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out << ',';
    out << coeffs_[i];
  }
  out << ']';
  return out.str();
}

bool operator==(const Element& lhs, const Element& rhs) {
  lhs.require_same_field(rhs);
  return lhs.coeffs_ == rhs.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Element& a) { return os << a.to_string(); }

}  // namespace cartier
