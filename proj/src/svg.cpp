#include "aglab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aglab/io.hpp"

namespace aglab {

namespace {

const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                         "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void absorb(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finalize() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi == lo) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

}  // namespace

std::string render_line_chart(const ChartSpec& chart, int width, int height) {
  const double ml = 62, mr = 16, mt = 34, mb = 44;
  const double pw = width - ml - mr;
  const double ph = height - mt - mb;

  Range xr, yr;
  for (const auto& s : chart.series) {
    for (double v : s.xs) xr.absorb(v);
    for (double v : s.ys) yr.absorb(v);
  }
  for (const auto& [x, y] : chart.dots) {
    xr.absorb(x);
    yr.absorb(y);
  }
  xr.finalize();
  yr.finalize();

  const auto px = [&](double v) { return ml + (v - xr.lo) / (xr.hi - xr.lo) * pw; };
  const auto py = [&](double v) { return mt + ph - (v - yr.lo) / (yr.hi - yr.lo) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
     << chart.title << "</text>\n";

  // axes with 5 ticks each
  os << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
     << mt + ph << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
     << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = xr.lo + (xr.hi - xr.lo) * t / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * t / 4.0;
    os << "<text x=\"" << px(fx) << "\" y=\"" << mt + ph + 16
       << "\" text-anchor=\"middle\">" << format_sig6(fx) << "</text>\n";
    os << "<text x=\"" << ml - 6 << "\" y=\"" << py(fy) + 4
       << "\" text-anchor=\"end\">" << format_sig6(fy) << "</text>\n";
    os << "<line x1=\"" << px(fx) << "\" y1=\"" << mt + ph << "\" x2=\"" << px(fx) << "\" y2=\""
       << mt + ph + 4 << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml - 4 << "\" y1=\"" << py(fy) << "\" x2=\"" << ml << "\" y2=\""
       << py(fy) << "\" stroke=\"black\"/>\n";
  }
  os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 8
     << "\" text-anchor=\"middle\">" << chart.xlabel << "</text>\n";
  os << "<text x=\"14\" y=\"" << mt + ph / 2
     << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << mt + ph / 2 << ")\">"
     << chart.ylabel << "</text>\n";

  for (std::size_t si = 0; si < chart.series.size(); ++si) {
    const auto& s = chart.series[si];
    const char* color = kColors[si % 10];
    std::ostringstream pts;
    bool open = false;
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) {
        if (open) {
          os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
             << pts.str() << "\"/>\n";
          pts.str("");
          open = false;
        }
        continue;
      }
      pts << px(s.xs[i]) << "," << py(s.ys[i]) << " ";
      open = true;
    }
    if (open)
      os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
         << pts.str() << "\"/>\n";
    os << "<text x=\"" << ml + pw - 4 << "\" y=\"" << mt + 14 + 14 * si
       << "\" text-anchor=\"end\" fill=\"" << color << "\">" << s.name << "</text>\n";
  }

  for (const auto& [x, y] : chart.dots) {
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"4\" fill=\"red\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace aglab
