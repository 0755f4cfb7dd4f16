#pragma once

#include <string>
#include <utility>
#include <vector>

namespace landauer::tools {

struct SvgSeries {
  std::string name;
  std::string color = "#000000";
  bool dashed = false;
  std::vector<std::pair<double, double>> points;  // (x, y), positive for log axes
};

/// Minimal self-contained log-log line plot; nonpositive points are dropped.
std::string render_loglog_svg(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<SvgSeries>& series);

}  // namespace landauer::tools
