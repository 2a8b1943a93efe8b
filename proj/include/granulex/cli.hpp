#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace granulex {

/// Full command-line front end. args excludes the program name. Writes JSON
/// results to out and diagnostics to err. Returns 0 on success, 1 when a
/// verification or search reports a negative outcome, 2 on usage or domain
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace granulex
