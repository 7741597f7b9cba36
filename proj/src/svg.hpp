#pragma once

#include "class_metrics.hpp"
#include "report.hpp"
#include "rollup.hpp"

#include <string>
#include <vector>

namespace oodq {

// Kiviat diagram: thirteen radial axes in table order between a min
// ring and a max ring; infinite bounds render at fixed radii with
// infinity labels; out-of-bounds axes are drawn in the flag color, so
// the flag count equals the class's rank. Throws
// AnalysisError{MissingBound} for uncovered metrics.
std::string emit_kiviat(const std::string& class_name, const ClassMetricVector& metrics,
                        const std::vector<ThresholdBound>& bounds);

// v(G) vs ev(G) scatter with quadrant boundaries at v=10 and ev=4.
std::string emit_scatter_svg(const std::vector<MethodReport>& methods);

} // namespace oodq
