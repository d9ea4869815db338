#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsys::cli {

/// Runs one subcommand; args exclude the program name. Reports go to `out`,
/// errors to `err`. Exit code 0 on success, 1 on a negative decision result,
/// 2 on errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsys::cli
