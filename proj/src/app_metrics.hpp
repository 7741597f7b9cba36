#pragma once

#include "model.hpp"

#include <map>
#include <string>

namespace oodq {

// Application-level size operands.
struct ApplicationMetrics {
  long ap_stat = 0;       // statements over all classes
  long ap_func = 0;       // concrete methods
  long ap_sline = 0;      // physical lines over all source files
  long ap_vg = 0;         // summed cyclomatic
  double ap_wmc = 0;      // ap_vg / ap_func (0 when no methods)
  long ap_eloc = 0;       // effective lines
  double ap_comf = 0;     // comment rate over all files
  int ap_inhg_levl = 0;   // classes on the longest inheritance link
};

// `method_cyclomatic` is keyed by method_key(); methods missing from it
// (skipped as malformed) contribute nothing.
ApplicationMetrics application_metrics(const ProjectModel& project,
                                       const std::map<std::string, int>& method_cyclomatic);

} // namespace oodq
