#pragma once

#include <optional>
#include <string>

#include "matfac/document.hpp"

namespace mfac {

struct RunOptions {
  std::optional<unsigned> precision;  // jet order override
  long zeta_power = 1;                // zeta = canonical d-th root to this power
  bool machine = false;
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 verification failure, 2 usage/parse/reference error
  Json machine;
  std::string human;
  std::string output(const RunOptions& o) const { return o.machine ? machine.dump(2) + "\n" : human; }
};

// Commands run in order; the first error (bad arguments, unresolved
// reference) stops the run with exit code 2.
RunResult run_document(ProblemDoc doc, const RunOptions& opts);
RunResult run_text(const std::string& text, const RunOptions& opts);
RunResult run_file(const std::string& path, const RunOptions& opts);

}  // namespace mfac
