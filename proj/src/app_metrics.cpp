#include "app_metrics.hpp"

#include "class_metrics.hpp"
#include "lines.hpp"

#include <algorithm>

namespace oodq {

ApplicationMetrics application_metrics(const ProjectModel& project,
                                       const std::map<std::string, int>& method_cyclomatic) {
  ApplicationMetrics app;
  for (std::size_t i = 0; i < project.classes.size(); ++i) {
    const ClassModel& cls = project.classes[i];
    for (const MethodModel& m : cls.methods) {
      if (!m.body) continue;
      ++app.ap_func;
      app.ap_stat += count_statements(*m.body);
      auto it = method_cyclomatic.find(method_key(cls, m));
      if (it != method_cyclomatic.end()) app.ap_vg += it->second;
    }
    app.ap_inhg_levl =
        std::max(app.ap_inhg_levl, 1 + inheritance_depth(project, static_cast<int>(i)));
  }
  app.ap_wmc = app.ap_func > 0
                   ? static_cast<double>(app.ap_vg) / static_cast<double>(app.ap_func)
                   : 0.0;
  app.ap_sline = project.source_tally.sline;
  app.ap_eloc = project.source_tally.eloc;
  app.ap_comf = comment_rate(project.source_tally);
  return app;
}

} // namespace oodq
