#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riopoly {

// Executes one CLI invocation. args excludes the program name.
// Exit codes: 0 success, 1 usage problems, 2 domain errors (the error name
// and location go to err). Same inputs produce byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace riopoly
