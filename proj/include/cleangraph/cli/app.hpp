#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cleangraph::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;            // not isomorphic / a claim failed
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitSpec = 3;          // ring-spec parse or semantic error
inline constexpr int kExitBudget = 4;        // size cap or search budget
inline constexpr int kExitDomain = 5;        // out-of-domain or out-of-scope
inline constexpr int kExitUsage = 64;        // bad flags

// Runs one subcommand (build, iso, verify, info). args excludes the program
// name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cleangraph::cli
