#pragma once

#include <cstdint>
#include <iosfwd>

#include "cartier/curve.hpp"
#include "cartier/oracle.hpp"
#include "cartier/report.hpp"
#include "cartier/spec_file.hpp"

namespace cartier {

// Process exit codes; a stable contract.
enum ExitCode : int {
  kExitOk = 0,
  kExitUnexpected = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitBound = 4,
  kExitMismatch = 5,
};

inline constexpr std::uint64_t kDefaultSeed = 20190415;

Report matrix_report(const CurveSpec& spec, const HyperellipticCurve& curve);
Report invariants_report(const CurveSpec& spec, const HyperellipticCurve& curve);
Report verify_report(const CurveSpec& spec, const HyperellipticCurve& curve,
                     std::uint64_t bound = kDefaultEnumerationBound, std::uint64_t seed = kDefaultSeed);
Report pitfall_report(const CurveSpec& spec, const HyperellipticCurve& curve);

// Entry point of the `cartier` tool. Writes reports to `out` and diagnostics
// to `err`, returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cartier
