#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace slopesmith::cli {

// Runs the command line `args` (without the program name). Returns the exit
// code: 0 consistent or success, 3 contradiction established, 2 inconclusive
// or any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// SLOPESMITH_CORPUS when set, else the directory configured at build time.
std::filesystem::path corpus_dir();

// An existing file path is returned as is; otherwise `name` is looked up as
// <corpus>/<name>.poly. Throws std::runtime_error when neither exists.
std::filesystem::path resolve_poly(const std::string& name);

}  // namespace slopesmith::cli
