#pragma once

#include "model.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace oodq {

// The thirteen Logiscope-style class metrics.
struct ClassMetricVector {
  double cl_comf = 0; // class comment rate
  long cl_comm = 0;   // comment lines in the class region
  long cl_data = 0;   // attributes
  long cl_data_publ = 0;
  long cl_func = 0;   // methods, constructors included
  long cl_func_publ = 0;
  long cl_line = 0;   // line-span extent
  long cl_stat = 0;   // statements
  long cl_wmc = 0;    // sum of v(G) over concrete methods
  long cu_cdused = 0; // distinct project classes used
  long cu_cdusers = 0;
  long in_bases = 0;  // transitive project-internal ancestors
  long in_noc = 0;    // direct children

  double value_of(const std::string& metric_name) const;
  static const std::vector<std::string>& metric_names(); // Table order
};

struct CKVector {
  long wmc = 0;
  long dit = 0;
  long noc = 0;
  long cbo = 0;
  long rfc = 0;
  long lcom = 0;
};

struct ClassMetricsOptions {
  bool unit_wmc = false;        // CK wmc counts methods instead of summed v
  bool lcom_static_attrs = false; // count static attributes as shареd state
};

// Project-wide use/user index. Use edges are non-inheritance references:
// attribute types, parameter and return types, local declarations and
// instantiations, resolved invocation receivers; self excluded.
class ReferenceIndex {
public:
  explicit ReferenceIndex(const ProjectModel& project);

  const std::set<int>& used_by(int class_index) const { return used_[static_cast<std::size_t>(class_index)]; }
  const std::set<int>& users_of(int class_index) const { return users_[static_cast<std::size_t>(class_index)]; }

private:
  std::vector<std::set<int>> used_;
  std::vector<std::set<int>> users_;
};

// Key for per-method lookups: `<qualified class>#<signature>`.
std::string method_key(const ClassModel& cls, const MethodModel& method);

ClassMetricVector class_metrics(const ProjectModel& project, int class_index,
                                const ReferenceIndex& refs,
                                const std::map<std::string, int>& method_cyclomatic);

CKVector ck_metrics(const ProjectModel& project, int class_index,
                    const ReferenceIndex& refs,
                    const std::map<std::string, int>& method_cyclomatic,
                    const ClassMetricsOptions& options = {});

// LCOM with the clamp rule: pairs sharing no attribute minus pairs
// sharing at least one, floored at zero.
long lcom_value(const ClassModel& cls, bool count_static_attrs = false);

} // namespace oodq
