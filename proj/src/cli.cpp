#include "cartier/cli.hpp"

#include <ostream>
#include <random>
#include <string>

#include "CLI11.hpp"

#include "cartier/error.hpp"
#include "cartier/invariants.hpp"

namespace cartier {

namespace {

MatrixSection section(std::string name, std::string semantics, const Matrix& m) {
  return {std::move(name), std::move(semantics), m.serialize()};
}

std::vector<MatrixSection> core_matrices(const HyperellipticCurve& curve) {
  const CartierData data = cartier_data(curve);
  return {
      section("Y", "coefficient matrix, entries c_(ip-j) of f^((p-1)/2); untwisted", data.coefficients),
      section("B", "Cartier-Manin, tau-linear, left action", data.cartier_manin),
      section("A", "Hasse-Witt, sigma-linear, left action", data.hasse_witt),
  };
}

}  // namespace

Report matrix_report(const CurveSpec& spec, const HyperellipticCurve& curve) {
  Report r;
  r.command = "matrix";
  r.curve = spec;
  r.matrices = core_matrices(curve);
  return r;
}

Report invariants_report(const CurveSpec& spec, const HyperellipticCurve& curve) {
  Report r;
  r.command = "invariants";
  r.curve = spec;
  r.matrices = core_matrices(curve);
  r.matrices.push_back(section("M", "Frobenius iterate A A^sigma ... A^(sigma^(e-1)), F_q-linear, left action",
                               frobenius_iterate(curve)));
  r.matrices.push_back(section("N", "Cartier iterate B B^tau ... B^(tau^(e-1)), F_q-linear, left action",
                               cartier_iterate(curve)));

  const ModPZeta zeta = mod_p_zeta(curve);
  InvariantSection inv;
  inv.p_rank = p_rank(curve);
  inv.a_number = a_number(curve);
  inv.superspecial = is_superspecial(curve);
  inv.l_mod_p = zeta.l_mod_p.serialize();
  inv.l_mod_p_text = format_polynomial(zeta.l_mod_p, "T");
  inv.chi_mod_p = zeta.chi_mod_p.serialize();
  inv.chi_mod_p_text = format_polynomial(zeta.chi_mod_p, "T", true);
  r.invariants = std::move(inv);
  return r;
}

Report verify_report(const CurveSpec& spec, const HyperellipticCurve& curve, std::uint64_t bound,
                     std::uint64_t seed) {
  Report r = invariants_report(spec, curve);
  r.command = "verify";

  OracleSection o;
  o.bound = bound;
  o.seed = seed;
  const unsigned g = curve.genus();
  const PointCounts counts = point_counts(curve, g, bound);
  const ExactLPoly exact = l_polynomial_from_counts(counts, curve.context().order(), g);
  o.counts = counts.counts;
  o.exact_l = exact.coeffs;
  o.exact_l_text = exact.to_string();
  o.p_rank_oracle = p_rank_oracle(curve, bound);

  const FieldContext fp = curve.context().prime_subfield();
  const Polynomial l_matrix = l_poly_mod_p(curve);
  o.l_agrees = exact.reduce(fp) == l_matrix;
  o.p_rank_agrees = o.p_rank_oracle == r.invariants->p_rank;

  // N_1 is invariant under x -> u x + v.
  std::mt19937_64 rng(seed);
  const FieldContext& ctx = curve.context();
  std::uniform_int_distribution<std::uint64_t> nonzero(1, ctx.order() - 1);
  std::uniform_int_distribution<std::uint64_t> any(0, ctx.order() - 1);
  const Element u = ctx.element_at(nonzero(rng));
  const Element v = ctx.element_at(any(rng));
  const HyperellipticCurve moved = make_curve(ctx, affine_substitute(curve.f(), u, v), g);
  o.isomorphism_invariant = count_points(moved, 1, bound) == counts.counts.front();

  r.oracle = std::move(o);
  return r;
}

Report pitfall_report(const CurveSpec& spec, const HyperellipticCurve& curve) {
  Report r;
  r.command = "pitfall";
  r.curve = spec;
  r.matrices = core_matrices(curve);

  const Matrix naive = naive_yui_product(curve);
  const Polynomial naive_cp = char_poly(naive);
  const Polynomial correct_cp = char_poly(frobenius_iterate(curve));

  PitfallSection s;
  s.naive_product = section("Y Y^sigma ... Y^(sigma^(e-1))",
                            "INCORRECT for zeta purposes: untwisted coefficient matrix iterated as if it were "
                            "Hasse-Witt",
                            naive);
  s.naive_char_poly = naive_cp.serialize();
  s.naive_char_poly_text = format_polynomial(naive_cp, "T", true);
  s.correct_char_poly = correct_cp.serialize();
  s.correct_char_poly_text = format_polynomial(correct_cp, "T", true);
  s.chi_mod_p_text = format_polynomial(chi_mod_p(curve), "T", true);
  s.differ = !(naive_cp == correct_cp);
  if (s.differ) {
    s.note =
        "T^g times the naive char poly is not chi(T) mod p: the iterate must use A = Y^T "
        "(or B = Y^tau with tau-twists), not Y.";
  } else if (curve.context().degree() == 1) {
    s.note = "e = 1: a single factor, and Y and A = Y^T share a characteristic polynomial.";
  } else {
    s.note = "both orders give the same characteristic polynomial for this curve; the pitfall is not visible here.";
  }
  r.pitfall = std::move(s);
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cartier-Manin and Hasse-Witt matrices of hyperelliptic curves over finite fields"};
  app.name("cartier");
  app.require_subcommand(1);

  std::uint64_t bound = kDefaultEnumerationBound;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "text";
  std::string spec_path;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", spec_path, "curve spec file")->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--bound", bound, "oracle enumeration cap (field elements)");
    sub->add_option("--seed", seed, "seed for randomized self-checks");
  };
  CLI::App* matrix_cmd = app.add_subcommand("matrix", "print Y, B and A");
  CLI::App* invariants_cmd = app.add_subcommand("invariants", "matrices, iterates and p-torsion invariants");
  CLI::App* verify_cmd = app.add_subcommand("verify", "invariants checked against brute-force point counts");
  CLI::App* pitfall_cmd = app.add_subcommand("pitfall", "show the naive Y Y^sigma ... product next to the right one");
  for (CLI::App* sub : {matrix_cmd, invariants_cmd, verify_cmd, pitfall_cmd}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    const SpecDocument doc = read_curve_spec(spec_path);
    const HyperellipticCurve curve = build_curve(doc);
    Report report;
    bool mismatch = false;
    if (*matrix_cmd) {
      report = matrix_report(doc.spec, curve);
    } else if (*invariants_cmd) {
      report = invariants_report(doc.spec, curve);
    } else if (*verify_cmd) {
      report = verify_report(doc.spec, curve, bound, seed);
      const auto& o = *report.oracle;
      mismatch = !(o.l_agrees && o.p_rank_agrees && o.isomorphism_invariant);
    } else {
      report = pitfall_report(doc.spec, curve);
    }
    out << (format == "machine" ? emit_machine(report) : emit_text(report));
    if (mismatch) {
      err << "verification FAILED: matrix-side data disagrees with point counting\n";
      return kExitMismatch;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "invalid curve: " << e.what() << "\n";
    return kExitValidation;
  } catch (const BoundExceeded& e) {
    err << "resource bound: " << e.what() << "\n";
    return kExitBound;
  } catch (const InternalError& e) {
    err << "self-check failed: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnexpected;
  }
}

}  // namespace cartier
