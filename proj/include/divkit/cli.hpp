#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "divkit/divergence.hpp"
#include "divkit/function_space.hpp"
#include "divkit/generators.hpp"

namespace divkit::cli {

enum ExitCode : int {
  kOk = 0,
  /// A verification found a counterexample.
  kFalsified = 1,
  /// Invalid generator certificate or improper score.
  kInvalidGenerator = 2,
  /// Missing files, bad formats, malformed flags.
  kInputError = 3,
  /// No optimizer restart converged.
  kNotConverged = 4,
};

/// dpd | ps | bhd:kappa | jhhb:zeta | table:PATH | expr:EXPR
GeneratorEta parse_eta(std::string_view text, double gamma);
/// identity | log | power:zeta | bdpd:l1:l2 | exp-minus-one | table:PATH | expr:EXPR
GeneratorPhi parse_phi(std::string_view text);
/// identity | power:zeta | log1p | table:PATH | expr:EXPR
GeneratorXi parse_xi(std::string_view text);
/// gaussian:MU,SIGMA[,MASS] or a density CSV path.
DensityObject parse_density(const std::string& text);

struct SpecFlags {
  std::string family;
  std::optional<std::string> eta;
  std::optional<std::string> phi;
  std::optional<std::string> xi;
  double gamma = 0.0;
  std::optional<double> zeta;
};

/// family in {holder, fdpd, jhhb, xi_holder}; the generators each family needs
/// must be present.
DivergenceSpec build_spec(const SpecFlags& flags);
/// Parses "family=holder,eta=dpd,gamma=0.5".
SpecFlags parse_spec_string(std::string_view text);

/// Runs one command line (without the program name). Reports go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace divkit::cli
