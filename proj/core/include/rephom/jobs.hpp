#pragma once

#include <string>

#include "rephom/report.hpp"

namespace rephom::jobs {

enum class Command {
  compute,
  invariants,
  ce_check,
  hodge,
  trace,
  drinfeld_check,
  macdonald,
  series,
  catalog,
  validate,
};

// One CLI invocation.  `space` and `group` accept builtin names or paths to
// model/algebra JSON files; `weight_cutoff` 0 derives the bound needed for
// the requested degree range.  The macdonald command reads `root_type`, `r`
// and, when both orders are >= 2, also checks the two-variable identity.
struct JobSpec {
  Command command = Command::catalog;
  std::string space;
  std::string group;
  int max_degree = 10;
  int weight_cutoff = 0;
  std::string root_type;
  int r = 1;
  int order_q = 0;
  int order_t = 0;
  std::string output;
  report::Format format = report::Format::json;
};

// Runs the job and writes its report.  Exit status: 0 on success, 1 on a
// mathematical mismatch (a failed identity or check), 2 on an input error
// (bad arguments, unparsable or invalid input files, insufficient cutoffs).
int run(const JobSpec& job);

}  // namespace rephom::jobs
