#pragma once

// Curve spec files:
//
//   p = <odd prime>
//   e = <positive integer>
//   modulus = [<int>,...]   # degree-e over F_p, low-to-high; omitted when e = 1
//   genus = <positive integer>
//   f = [<elem>,...]        # low-to-high, elements in the field-element grammar
//
// Keys appear exactly once, in this order. `#` starts a comment.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cartier/curve.hpp"
#include "cartier/gf.hpp"

namespace cartier {

struct CurveSpec {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::vector<Residue> modulus;  // empty when e = 1
  unsigned genus = 0;
  std::vector<std::string> f;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

struct SpecDocument {
  CurveSpec spec;
  std::string source;
  std::map<std::string, std::size_t> lines;  // key -> 1-based line
};

// Throws ParseError with a `source:line:` prefix.
SpecDocument parse_curve_spec(std::string_view text, const std::string& source = "<spec>");
SpecDocument read_curve_spec(const std::string& path);

// Builds the field and curve. Element syntax errors throw ParseError;
// mathematical problems (even p, reducible modulus, bad f) throw
// ValidationError. Both carry the line of the offending key.
FieldContext build_field(const SpecDocument& doc);
HyperellipticCurve build_curve(const SpecDocument& doc);

std::string format_curve_spec(const CurveSpec& spec);

// Splits `[a,b,[c,d]]` into its top-level items. Throws ParseError.
std::vector<std::string> split_list(std::string_view text);

}  // namespace cartier
