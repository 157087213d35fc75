#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kz::cli {

// Parses and executes one command line (argv without the program name).
// Verbs: classify, matrix, commute, witness, verify, qcheck.
// Exit codes: 0 success / everything verified, 1 verification failure (or no
// witness to produce), 2 usage or domain error. Identical requests produce
// byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace kz::cli
