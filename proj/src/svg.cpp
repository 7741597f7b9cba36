#include "svg.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace oodq {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double value, const char* spec = "%.1f") {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), spec, value);
  return buffer;
}

std::string escape_xml(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out.push_back(c);
    }
  }
  return out;
}

const ThresholdBound& bound_for(const std::vector<ThresholdBound>& bounds,
                                const std::string& metric) {
  for (const ThresholdBound& b : bounds)
    if (b.metric_name == metric) return b;
  fail(ErrorCode::MissingBound, "no bound configured for metric " + metric);
}

// Radial position of a value between the min ring (t=0) and the max
// ring (t=1). Infinite bounds pin in-range values mid-band.
double radial_t(double value, const ThresholdBound& bound) {
  const bool lo_inf = std::isinf(bound.min);
  const bool hi_inf = std::isinf(bound.max);
  if (lo_inf && hi_inf) return 0.5;
  if (hi_inf) return value >= bound.min ? 0.5 : -0.25;
  if (lo_inf) return value <= bound.max ? 0.5 : 1.1;
  if (bound.max == bound.min) {
    if (value == bound.min) return 1.0;
    return value > bound.max ? 1.1 : -0.25;
  }
  double t = (value - bound.min) / (bound.max - bound.min);
  return std::clamp(t, -0.5, 1.2);
}

std::string metric_value_label(const std::string& metric, double value) {
  if (metric == "cl_comf") return fmt(value, "%.2f");
  return std::to_string(static_cast<long>(value));
}

std::string bound_label(double limit) {
  if (std::isinf(limit)) return limit > 0 ? "\xE2\x88\x9E" : "-\xE2\x88\x9E";
  if (limit == std::floor(limit)) return std::to_string(static_cast<long>(limit));
  return fmt(limit, "%.2f");
}

} // namespace

std::string emit_kiviat(const std::string& class_name, const ClassMetricVector& metrics,
                        const std::vector<ThresholdBound>& bounds) {
  const double size = 640;
  const double cx = size / 2, cy = size / 2;
  const double inner = 90, outer = 210;
  const auto& names = ClassMetricVector::metric_names();
  const std::size_t n = names.size();

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  svg << "<title>" << escape_xml(class_name) << "</title>\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << cx << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << escape_xml(class_name) << "</text>\n";
  svg << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << inner
      << "\" fill=\"none\" stroke=\"#9e9e9e\" stroke-dasharray=\"4 3\"/>\n";
  svg << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << outer
      << "\" fill=\"none\" stroke=\"#616161\"/>\n";

  std::vector<std::pair<double, double>> points;
  int flags = 0;
  std::ostringstream axes, labels, dots;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& metric = names[i];
    const ThresholdBound& bound = bound_for(bounds, metric);
    double value = metrics.value_of(metric);
    bool flagged = !(value >= bound.min && value <= bound.max);
    flags += flagged ? 1 : 0;
    double angle = -kPi / 2 + 2 * kPi * static_cast<double>(i) / static_cast<double>(n);
    double tipx = cx + outer * std::cos(angle);
    double tipy = cy + outer * std::sin(angle);
    const char* color = flagged ? "#c62828" : "#37474f";
    axes << "<line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << fmt(tipx)
         << "\" y2=\"" << fmt(tipy) << "\" stroke=\"#bdbdbd\"/>\n";
    double lx = cx + (outer + 34) * std::cos(angle);
    double ly = cy + (outer + 34) * std::sin(angle);
    labels << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
           << "\" text-anchor=\"middle\" font-size=\"11\" fill=\"" << color << "\">"
           << escape_xml(metric) << "</text>\n";
    labels << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly + 12)
           << "\" text-anchor=\"middle\" font-size=\"10\" fill=\"" << color << "\">"
           << metric_value_label(metric, value) << "</text>\n";
    // ring annotations: max at the outer ring, min at the inner
    double mx = cx + (outer + 10) * std::cos(angle);
    double my = cy + (outer + 10) * std::sin(angle);
    labels << "<text x=\"" << fmt(mx) << "\" y=\"" << fmt(my)
           << "\" text-anchor=\"middle\" font-size=\"8\" fill=\"#757575\">"
           << escape_xml(bound_label(bound.max)) << "</text>\n";
    double ix = cx + (inner - 12) * std::cos(angle);
    double iy = cy + (inner - 12) * std::sin(angle);
    labels << "<text x=\"" << fmt(ix) << "\" y=\"" << fmt(iy)
           << "\" text-anchor=\"middle\" font-size=\"8\" fill=\"#757575\">"
           << escape_xml(bound_label(bound.min)) << "</text>\n";

    double t = radial_t(value, bound);
    double r = std::max(0.02 * size, inner + t * (outer - inner));
    double px = cx + r * std::cos(angle);
    double py = cy + r * std::sin(angle);
    points.push_back({px, py});
    dots << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py) << "\" r=\"4\" fill=\""
         << color << "\"/>\n";
  }

  svg << axes.str();
  svg << "<polygon points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) svg << " ";
    svg << fmt(points[i].first) << "," << fmt(points[i].second);
  }
  svg << "\" fill=\"#90caf9\" fill-opacity=\"0.35\" stroke=\"#1565c0\"/>\n";
  svg << dots.str();
  svg << labels.str();
  svg << "<text x=\"" << cx << "\" y=\"" << size - 14
      << "\" text-anchor=\"middle\" font-size=\"12\">flagged " << flags << " of " << n
      << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string emit_scatter_svg(const std::vector<MethodReport>& methods) {
  const double width = 640, height = 480;
  const double left = 60, right = 20, top = 28, bottom = 46;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  int max_v = 12, max_ev = 6;
  for (const MethodReport& m : methods) {
    max_v = std::max(max_v, m.complexity.v + 2);
    max_ev = std::max(max_ev, m.complexity.ev + 2);
  }

  auto x_of = [&](double v) { return left + plot_w * v / static_cast<double>(max_v); };
  auto y_of = [&](double ev) {
    return top + plot_h * (1.0 - ev / static_cast<double>(max_ev));
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
      << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2
      << "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">cyclomatic vs essential "
         "complexity</text>\n";
  // axes
  svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w
      << "\" y2=\"" << top + plot_h << "\" stroke=\"#424242\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << top + plot_h << "\" stroke=\"#424242\"/>\n";
  svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10
      << "\" text-anchor=\"middle\" font-size=\"12\">v(G)</text>\n";
  svg << "<text x=\"16\" y=\"" << top + plot_h / 2
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
      << top + plot_h / 2 << ")\">ev(G)</text>\n";
  // quadrant boundaries
  svg << "<line x1=\"" << fmt(x_of(10)) << "\" y1=\"" << top << "\" x2=\"" << fmt(x_of(10))
      << "\" y2=\"" << top + plot_h
      << "\" stroke=\"#c62828\" stroke-dasharray=\"6 4\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << fmt(y_of(4)) << "\" x2=\""
      << left + plot_w << "\" y2=\"" << fmt(y_of(4))
      << "\" stroke=\"#c62828\" stroke-dasharray=\"6 4\"/>\n";
  svg << "<text x=\"" << fmt(x_of(10) + 4) << "\" y=\"" << top + 12
      << "\" font-size=\"10\" fill=\"#c62828\">v=10</text>\n";
  svg << "<text x=\"" << left + 4 << "\" y=\"" << fmt(y_of(4) - 4)
      << "\" font-size=\"10\" fill=\"#c62828\">ev=4</text>\n";

  for (const MethodReport& m : methods) {
    const char* color = "#1565c0";
    if (m.quadrant == ScatterQuadrant::ReliableUnmaintainable) color = "#ef6c00";
    else if (m.quadrant == ScatterQuadrant::UnreliableMaintainable) color = "#6a1b9a";
    else if (m.quadrant == ScatterQuadrant::UnreliableUnmaintainable) color = "#c62828";
    svg << "<circle cx=\"" << fmt(x_of(m.complexity.v)) << "\" cy=\""
        << fmt(y_of(m.complexity.ev)) << "\" r=\"3.5\" fill=\"" << color
        << "\" fill-opacity=\"0.7\"><title>" << escape_xml(m.method_id) << "</title>"
        << "</circle>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace oodq
