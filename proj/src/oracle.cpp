#include "cartier/oracle.hpp"

#include <sstream>

#include "cartier/error.hpp"

namespace cartier {

namespace {

__extension__ using i128 = __int128;

std::uint64_t checked_power(std::uint64_t base, unsigned k, std::uint64_t bound) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (result > bound / base) {
      throw BoundExceeded("q^" + std::to_string(k) + " exceeds the enumeration bound " +
                          std::to_string(bound));
    }
    result *= base;
  }
  return result;
}

i128 binomial(unsigned n, unsigned k) {
  i128 r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// b_k from Newton's identities: k b_k = -sum_{i=1..k} S_i b_(k-i).
std::int64_t newton_step(const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& s,
                         std::size_t k) {
  i128 acc = 0;
  for (std::size_t i = 1; i <= k; ++i) acc -= static_cast<i128>(s[i]) * b[k - i];
  if (acc % static_cast<i128>(k) != 0) {
    throw InternalError("Newton's identity gave a non-integral coefficient at degree " + std::to_string(k));
  }
  return static_cast<std::int64_t>(acc / static_cast<i128>(k));
}

// s[k] = q^k + 1 - N_k, s[0] unused.
std::vector<std::int64_t> power_sums(const PointCounts& counts, std::uint64_t q) {
  std::vector<std::int64_t> s(counts.counts.size() + 1, 0);
  std::int64_t qk = 1;
  for (std::size_t k = 1; k <= counts.counts.size(); ++k) {
    qk *= static_cast<std::int64_t>(q);
    s[k] = qk + 1 - static_cast<std::int64_t>(counts.counts[k - 1]);
  }
  return s;
}

}  // namespace

std::vector<Residue> ExactLPoly::mod_p(std::uint64_t p) const {
  std::vector<Residue> out;
  out.reserve(coeffs.size());
  const auto sp = static_cast<std::int64_t>(p);
  for (auto b : coeffs) {
    std::int64_t r = b % sp;
    if (r < 0) r += sp;
    out.push_back(static_cast<Residue>(r));
  }
  return out;
}

Polynomial ExactLPoly::reduce(const FieldContext& prime_field) const {
  std::vector<Element> c;
  for (auto r : mod_p(prime_field.characteristic())) {
    c.push_back(prime_field.from_int(static_cast<std::int64_t>(r)));
  }
  return Polynomial(prime_field, std::move(c));
}

std::string ExactLPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t b = coeffs[i];
    if (b == 0) continue;
    if (!first) out << (b < 0 ? " - " : " + ");
    if (first && b < 0) out << '-';
    const std::int64_t mag = b < 0 ? -b : b;
    if (i == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << 'T';
      if (i > 1) out << '^' << i;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

// ---------------------------------------------------------------------------

FieldEmbedding::FieldEmbedding(const FieldContext& base, unsigned k)
    : base_(base),
      target_(k == 1 ? base
                     : FieldContext(base.characteristic(), find_irreducible(base.characteristic(),
                                                                            base.degree() * k))) {
  if (k == 0) throw ValidationError("extension degree must be positive");
  const unsigned e = base.degree();
  if (k == 1) {
    Element power = base.one();
    for (unsigned i = 0; i < e; ++i) {
      basis_images_.push_back(power);
      power *= base.generator();
    }
    return;
  }
  // Root of the base modulus in the target field.
  std::vector<Element> modulus;
  for (auto c : base.modulus()) modulus.push_back(target_.from_int(static_cast<std::int64_t>(c)));
  const Polynomial m(target_, std::move(modulus));
  for (std::uint64_t idx = 0; idx < target_.order(); ++idx) {
    Element beta = target_.element_at(idx);
    if (!m.evaluate(beta).is_zero()) continue;
    Element power = target_.one();
    for (unsigned i = 0; i < e; ++i) {
      basis_images_.push_back(power);
      power *= beta;
    }
    return;
  }
  throw InternalError("no root of the base modulus in the extension field");
}

Element FieldEmbedding::operator()(const Element& a) const {
  if (!(a.context() == base_)) throw ContextMismatch("embedding applied to an element of another field");
  Element out = target_.zero();
  const auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) out += basis_images_[i] * target_.from_int(static_cast<std::int64_t>(c[i]));
  }
  return out;
}

Polynomial FieldEmbedding::operator()(const Polynomial& a) const {
  std::vector<Element> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back((*this)(x));
  return Polynomial(target_, std::move(c));
}

std::uint64_t count_points(const HyperellipticCurve& curve, unsigned k, std::uint64_t bound) {
  if (k == 0) throw ValidationError("count_points needs k >= 1");
  checked_power(curve.context().order(), k, bound);
  const FieldEmbedding embed(curve.context(), k);
  const FieldContext& field = embed.target();
  const Polynomial f = embed(curve.f());

  std::uint64_t affine = 0;
  for (std::uint64_t idx = 0; idx < field.order(); ++idx) {
    const Element value = f.evaluate(field.element_at(idx));
    if (value.is_zero()) {
      affine += 1;
    } else if (value.is_square()) {
      affine += 2;
    }
  }
  std::uint64_t at_infinity = 1;
  if (*f.degree() == 2 * curve.genus() + 2) at_infinity = f.leading().is_square() ? 2 : 0;
  return affine + at_infinity;
}

PointCounts point_counts(const HyperellipticCurve& curve, unsigned up_to, std::uint64_t bound) {
  checked_power(curve.context().order(), up_to, bound);
  PointCounts out;
  for (unsigned k = 1; k <= up_to; ++k) out.counts.push_back(count_points(curve, k, bound));
  return out;
}

ExactLPoly l_polynomial_from_counts(const PointCounts& counts, std::uint64_t q, unsigned genus) {
  if (counts.counts.size() < genus) throw ValidationError("need N_1..N_g to rebuild L(T)");
  const std::vector<std::int64_t> s = power_sums(counts, q);
  std::vector<std::int64_t> b(2 * genus + 1, 0);
  b[0] = 1;
  for (std::size_t k = 1; k <= genus; ++k) b[k] = newton_step(b, s, k);
  std::int64_t qpow = 1;
  for (std::size_t i = genus; i-- > 0;) {
    qpow *= static_cast<std::int64_t>(q);
    b[2 * genus - i] = qpow * b[i];
  }
  // |b_i| <= C(2g, i) q^(i/2)
  i128 qi = 1;
  for (unsigned i = 0; i <= 2 * genus; ++i) {
    const i128 c = binomial(2 * genus, i);
    const i128 bi = b[i];
    if (bi * bi > c * c * qi) {
      throw InternalError("L-polynomial coefficient b_" + std::to_string(i) + " = " +
                          std::to_string(b[i]) + " violates the Weil bound");
    }
    qi *= q;
  }
  return {std::move(b), q};
}

ExactLPoly l_polynomial_exact(const HyperellipticCurve& curve, std::uint64_t bound) {
  return l_polynomial_from_counts(point_counts(curve, curve.genus(), bound), curve.context().order(),
                                  curve.genus());
}

std::size_t p_rank_oracle(const HyperellipticCurve& curve, std::uint64_t bound) {
  const ExactLPoly l = l_polynomial_exact(curve, bound);
  const auto reduced = l.mod_p(curve.characteristic());
  std::size_t deg = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (reduced[i] != 0) deg = i;
  }
  return deg;
}

OverdeterminationCheck functional_equation_check(const HyperellipticCurve& curve, std::uint64_t bound) {
  const unsigned g = curve.genus();
  const std::uint64_t q = curve.context().order();
  const PointCounts counts = point_counts(curve, g + 1, bound);
  const ExactLPoly l = l_polynomial_from_counts(counts, q, g);
  const std::vector<std::int64_t> s = power_sums(counts, q);
  std::vector<std::int64_t> b(l.coeffs.begin(), l.coeffs.begin() + g + 1);
  b.push_back(0);
  return {newton_step(b, s, g + 1), l.coeffs[g + 1]};
}

Polynomial affine_substitute(const Polynomial& f, const Element& u, const Element& v) {
  const FieldContext& ctx = f.context();
  const Polynomial lin(ctx, {v, u});
  Polynomial acc(ctx);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * lin + Polynomial(ctx, {*it});
  }
  return acc;
}

}  // namespace cartier
