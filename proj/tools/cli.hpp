#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sepaths::cli {

// Runs one command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace sepaths::cli
