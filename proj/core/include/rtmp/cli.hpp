#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rtmp::cli {

// Entry point for the command line tool; args excludes the program name.
// Subcommands: solve, check, verify, convert, preset.
// Exit codes: 0 solved / verified, 2 infeasible, 1 error or bad usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::vector<std::string> preset_names();

// The embedded problem JSON for a preset; throws on unknown names.
std::string preset_problem_text(const std::string& name);

}  // namespace rtmp::cli
