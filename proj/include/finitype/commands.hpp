#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace finitype {

enum ExitCode : int {
    exit_success = 0,       // FiniteType, or the command succeeded
    exit_not_finite = 1,    // NotFinite (or the checked property fails)
    exit_input_error = 2,   // usage, parse or input-domain error
    exit_inconclusive = 3,  // mutation-class limit reached before a verdict
    exit_disagreement = 4,  // compare found the routes disagreeing
};

/// Entry point of the command-line tool. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// --limit when given, else FINITYPE_ORACLE_LIMIT, else the default.
/// Throws std::invalid_argument on a malformed environment value.
std::size_t resolve_oracle_limit(std::size_t from_flag);

}  // namespace finitype
