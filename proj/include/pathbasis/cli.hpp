/*
  Verb dispatch behind the command-line tool, kept in the library so tests can
  drive it without spawning processes.

  Exit codes: 0 success, 1 usage/input error, 2 hbps rejection (shared edges
  between independent substructure paths; the verbatim diagnostic goes to the
  error stream), 3 verification failure.
*/
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pathbasis/path_algebra.hpp"

namespace pathbasis {

struct Command {
  std::string verb;  // build | enumerate | basis | hbps | verify | represent
  std::string input_path;
  std::string output_path;  // empty = the provided output stream

  std::optional<std::uint64_t> seed;  // --seed N
  std::string override_path;          // --override FILE
  std::uint64_t max_paths = kDefaultPathLimit;  // enumeration / full-span cap
  std::uint64_t sample_size = 1000;             // sampled span checks
  std::string format = "structured";            // or "summary"
  int jobs = 1;
  std::string basis_path;  // verify / represent: basis document to check
  std::string path_file;   // represent: path document
  bool timings = false;    // verify: include timings in structured output
};

int run_command(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace pathbasis
