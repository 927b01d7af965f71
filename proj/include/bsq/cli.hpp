#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bsq {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;         // parse, domain or I/O error
inline constexpr int kExitVerifyFailed = 2;  // a verify suite reported a failure

// Runs one command; args excludes the program name. Results go to `out`
// (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsq
