#pragma once

// Command-line front end. Subcommands: count, qcount, ratio, verify, asym,
// render, corpus. Exit codes: 0 success, 1 usage or input error, 2 a failed
// verification (or a closed form disagreeing with the engines).

#include <iosfwd>
#include <string>
#include <vector>

namespace lozenge {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lozenge
