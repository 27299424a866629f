#pragma once

// Reports emitted by the command-line tool. The machine form is a JSON
// document; field elements use the canonical `[c0,...]` grammar and matrices
// are row-major nested lists. parse_machine(emit_machine(r)) == r.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cartier/spec_file.hpp"

namespace cartier {

struct MatrixSection {
  std::string name;
  std::string semantics;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const MatrixSection&, const MatrixSection&) = default;
};

struct InvariantSection {
  std::uint64_t p_rank = 0;
  std::uint64_t a_number = 0;
  bool superspecial = false;
  std::vector<std::string> l_mod_p;  // low-to-high over F_p
  std::string l_mod_p_text;
  std::vector<std::string> chi_mod_p;
  std::string chi_mod_p_text;

  friend bool operator==(const InvariantSection&, const InvariantSection&) = default;
};

struct OracleSection {
  std::uint64_t bound = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> counts;
  std::vector<std::int64_t> exact_l;
  std::string exact_l_text;
  std::uint64_t p_rank_oracle = 0;
  bool l_agrees = false;
  bool p_rank_agrees = false;
  bool isomorphism_invariant = false;

  friend bool operator==(const OracleSection&, const OracleSection&) = default;
};

struct PitfallSection {
  MatrixSection naive_product;
  std::vector<std::string> naive_char_poly;  // over F_q
  std::string naive_char_poly_text;
  std::vector<std::string> correct_char_poly;  // char poly of the Frobenius iterate
  std::string correct_char_poly_text;
  std::string chi_mod_p_text;
  bool differ = false;
  std::string note;

  friend bool operator==(const PitfallSection&, const PitfallSection&) = default;
};

struct Report {
  std::string command;
  CurveSpec curve;
  std::vector<MatrixSection> matrices;
  std::optional<InvariantSection> invariants;
  std::optional<OracleSection> oracle;
  std::optional<PitfallSection> pitfall;

  friend bool operator==(const Report&, const Report&) = default;
};

std::string emit_machine(const Report& report);
// Throws ParseError.
Report parse_machine(const std::string& text);
std::string emit_text(const Report& report);

}  // namespace cartier
