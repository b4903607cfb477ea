#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hitchin {

struct RunConfig {
  std::string command;        // classify | verify | sweep | wallcross
  std::string case_name;      // --case
  std::string params_input;   // --params: file path, or inline JSON if it starts with '{'
  std::string weights_input;  // --weights: file path or inline JSON
  double tol = 1e-9;
  double cluster_tol = 1e-7;
  long samples = 1000;
  std::uint64_t seed = 1;
  std::string out_path;  // --out; empty writes the document to `out`
  std::string branch;    // --branch: restrict sweep rows to one branch
  double wall_from = -0.5;
  double wall_to = 2.5;
};

// Runs one command and writes a single JSON document.  Returns the process
// exit code: 0 success, 2 malformed input or weights, 3 non-elliptic
// parameters, 4 verification disagreement.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace hitchin
