#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace landauer::tools {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 520.0;
constexpr double kMarginLeft = 80.0;
constexpr double kMarginRight = 180.0;
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 60.0;

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string render_loglog_svg(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<SvgSeries>& series) {
  double lx_min = 1e300, lx_max = -1e300, ly_min = 1e300, ly_max = -1e300;
  for (const SvgSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
        continue;
      }
      lx_min = std::min(lx_min, std::log10(x));
      lx_max = std::max(lx_max, std::log10(x));
      ly_min = std::min(ly_min, std::log10(y));
      ly_max = std::max(ly_max, std::log10(y));
    }
  }
  if (lx_min > lx_max || ly_min > ly_max) {
    lx_min = ly_min = 0.0;
    lx_max = ly_max = 1.0;
  }
  if (lx_max - lx_min < 1e-9) lx_max = lx_min + 1.0;
  if (ly_max - ly_min < 1e-9) ly_max = ly_min + 1.0;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto px = [&](double x) {
    return kMarginLeft + (std::log10(x) - lx_min) / (lx_max - lx_min) * plot_w;
  };
  const auto py = [&](double y) {
    return kMarginTop + plot_h -
           (std::log10(y) - ly_min) / (ly_max - ly_min) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"17\">"
      << title << "</text>\n";

  // Frame.
  svg << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
      << plot_w << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"#333\"/>\n";

  // Decade grid lines and tick labels.
  for (int d = static_cast<int>(std::ceil(lx_min));
       d <= static_cast<int>(std::floor(lx_max)); ++d) {
    const double x = px(std::pow(10.0, d));
    svg << "<line x1=\"" << x << "\" y1=\"" << kMarginTop << "\" x2=\"" << x
        << "\" y2=\"" << kMarginTop + plot_h
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << x << "\" y=\"" << kMarginTop + plot_h + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">1e"
        << d << "</text>\n";
  }
  for (int d = static_cast<int>(std::ceil(ly_min));
       d <= static_cast<int>(std::floor(ly_max)); ++d) {
    const double y = py(std::pow(10.0, d));
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << y << "\" x2=\""
        << kMarginLeft + plot_w << "\" y2=\"" << y
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"12\">1e"
        << d << "</text>\n";
  }
  svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\""
      << kHeight - 14
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
      << x_label << "</text>\n";
  svg << "<text x=\"20\" y=\"" << kMarginTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\""
         " transform=\"rotate(-90 20 "
      << kMarginTop + plot_h / 2 << ")\">" << y_label << "</text>\n";

  // Series polylines and legend.
  double legend_y = kMarginTop + 10.0;
  for (const SvgSeries& s : series) {
    std::ostringstream pts;
    for (const auto& [x, y] : s.points) {
      if (!(x > 0.0) || !(y > 0.0)) continue;
      pts << px(x) << ',' << py(y) << ' ';
    }
    svg << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.8\"";
    if (s.dashed) svg << " stroke-dasharray=\"6,4\"";
    svg << " points=\"" << pts.str() << "\"/>\n";

    const double lx = kWidth - kMarginRight + 12.0;
    svg << "<line x1=\"" << lx << "\" y1=\"" << legend_y << "\" x2=\""
        << lx + 26 << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color
        << "\" stroke-width=\"2\"";
    if (s.dashed) svg << " stroke-dasharray=\"6,4\"";
    svg << "/>\n";
    svg << "<text x=\"" << lx + 32 << "\" y=\"" << legend_y + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.name
        << "</text>\n";
    legend_y += 18.0;
  }
  svg << "</svg>\n";
  (void)fmt;
  return svg.str();
}

}  // namespace landauer::tools
