#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "covlab/io.hpp"

namespace covlab::cli {

inline constexpr const char* kVersion = "0.1.0";

struct VerdictLine {
  std::string name;
  bool ok = true;
  std::vector<int> witness;
  std::string detail;
};

/// Outcome of one command. Exit code 0: every verdict passed; 1: some
/// mathematical verdict is negative; 2: the input could not be used.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // (reference, FNV-1a digest)
  std::vector<VerdictLine> verdicts;
  std::vector<std::string> summary;  // human-readable result lines
  io::json result = io::json::object();
  std::optional<double> timing_ms;
  std::optional<std::string> error;
  bool json_output = false;
  int exit_code = 0;

  void add(VerdictLine v);
  io::json to_json() const;
  std::string to_text() const;
};

std::vector<std::string> verbs();

/// Parses the verb's flags and runs it. Never throws: every failure is folded
/// into the report.
RunReport run_command(const std::string& verb, const std::vector<std::string>& args);

/// Entry point of the covlab executable; prints the report and returns the exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace covlab::cli
