#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpr::cli {

// Parses and executes one command. args excludes the program name. Returns
// 0 on success, 2 for argument/validation problems, 3 for numeric failures
// (degenerate conditioning, reports with nothing to analyze).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpr::cli
