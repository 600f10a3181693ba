#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdh {

// Runs one CLI invocation. args excludes the program name. The result payload
// goes to out; diagnostics and the run manifest go to err (or to the file
// named by --manifest). Exit status: 0 success, 1 invalid input, 2 unknown
// subcommand, 3 budget-inconclusive result.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gdh
