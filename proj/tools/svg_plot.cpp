#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace symtoep::cli {
namespace {

constexpr int kWidth = 960;
constexpr int kHeight = 640;
constexpr int kMarginLeft = 80;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 50;
constexpr int kMarginBottom = 60;

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

std::string fmt_tick(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4g", v);
  return buffer;
}

// "nice" tick spacing: 1, 2 or 5 times a power of ten
double nice_step(double span, int target_ticks) {
  const double raw = span / std::max(target_ticks, 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  if (norm <= 1.0) return mag;
  if (norm <= 2.0) return 2.0 * mag;
  if (norm <= 5.0) return 5.0 * mag;
  return 10.0 * mag;
}

}  // namespace

void write_scatter_svg(std::ostream& out, const std::string& title,
                       const std::vector<PlotSeries>& series) {
  std::size_t max_count = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& s : series) {
    max_count = std::max(max_count, s.values.size());
    for (double v : s.values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (max_count == 0 || !std::isfinite(lo)) {
    lo = 0.0;
    hi = 1.0;
    max_count = 1;
  }
  if (hi <= lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.04 * (hi - lo);
  lo -= pad;
  hi += pad;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto x_of = [&](double index) {
    return kMarginLeft + plot_w * (index - 1.0) /
                             std::max<double>(1.0, static_cast<double>(max_count) - 1.0);
  };
  const auto y_of = [&](double v) {
    return kMarginTop + plot_h * (1.0 - (v - lo) / (hi - lo));
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">"
      << title << "</text>\n";

  // frame
  out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop
      << "\" width=\"" << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
      << "\" fill=\"none\" stroke=\"#333\"/>\n";

  // y ticks
  const double ystep = nice_step(hi - lo, 8);
  for (double tick = std::ceil(lo / ystep) * ystep; tick <= hi;
       tick += ystep) {
    const double y = y_of(tick);
    out << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << fmt(y)
        << "\" x2=\"" << kMarginLeft << "\" y2=\"" << fmt(y)
        << "\" stroke=\"#333\"/>\n";
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << fmt(y) << "\" x2=\""
        << kWidth - kMarginRight << "\" y2=\"" << fmt(y)
        << "\" stroke=\"#eee\"/>\n";
    out << "<text x=\"" << kMarginLeft - 9 << "\" y=\"" << fmt(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << fmt_tick(tick) << "</text>\n";
  }

  // x ticks
  const double xstep =
      std::max(1.0, nice_step(static_cast<double>(max_count), 10));
  for (double tick = 0.0; tick <= static_cast<double>(max_count);
       tick += xstep) {
    const double index = std::max(1.0, tick);
    const double x = x_of(index);
    out << "<line x1=\"" << fmt(x) << "\" y1=\""
        << kHeight - kMarginBottom << "\" x2=\"" << fmt(x) << "\" y2=\""
        << kHeight - kMarginBottom + 5 << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << fmt(x) << "\" y=\""
        << kHeight - kMarginBottom + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << fmt_tick(index) << "</text>\n";
    if (tick == 0.0 && xstep <= 1.0) break;
  }
  out << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\""
      << kHeight - 18
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">index j</text>\n";

  const char* colors[] = {"#1f6fb4", "#d62728"};
  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = colors[si % 2];
    if (si % 2 == 0) {
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        out << "<circle cx=\"" << fmt(x_of(static_cast<double>(i + 1)))
            << "\" cy=\"" << fmt(y_of(s.values[i]))
            << "\" r=\"2.2\" fill=\"" << color
            << "\" fill-opacity=\"0.7\"/>\n";
      }
    } else {
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        const double x = x_of(static_cast<double>(i + 1));
        const double y = y_of(s.values[i]);
        out << "<path d=\"M" << fmt(x - 2.4) << ' ' << fmt(y - 2.4) << " L"
            << fmt(x + 2.4) << ' ' << fmt(y + 2.4) << " M" << fmt(x - 2.4)
            << ' ' << fmt(y + 2.4) << " L" << fmt(x + 2.4) << ' '
            << fmt(y - 2.4) << "\" stroke=\"" << color
            << "\" stroke-width=\"1\" stroke-opacity=\"0.7\"/>\n";
      }
    }
    // legend
    const double ly = kMarginTop + 16.0 + 18.0 * static_cast<double>(si);
    const double lx = kWidth - kMarginRight - 170.0;
    if (si % 2 == 0)
      out << "<circle cx=\"" << fmt(lx) << "\" cy=\"" << fmt(ly - 4)
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    else
      out << "<path d=\"M" << fmt(lx - 3) << ' ' << fmt(ly - 7) << " L"
          << fmt(lx + 3) << ' ' << fmt(ly - 1) << " M" << fmt(lx - 3) << ' '
          << fmt(ly - 1) << " L" << fmt(lx + 3) << ' ' << fmt(ly - 7)
          << "\" stroke=\"" << color << "\"/>\n";
    out << "<text x=\"" << fmt(lx + 9) << "\" y=\"" << fmt(ly)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.name
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace symtoep::cli
