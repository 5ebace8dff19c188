#ifndef PSTIEFEL_CLI_CLI_HPP
#define PSTIEFEL_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "verify.hpp"

namespace pstiefel::cli {

enum ExitCode : int { ok = 0, invalid_input = 1, internal_error = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// usage text and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Same, with a caller-provided verify configuration (used for fault injection).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const VerifyOptions& verify_defaults);

} // namespace pstiefel::cli

#endif // PSTIEFEL_CLI_CLI_HPP
