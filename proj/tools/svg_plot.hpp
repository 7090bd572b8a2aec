#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symtoep::cli {

struct PlotSeries {
  std::string name;
  std::vector<double> values;  // plotted against index 1..size
};

/// Hand-rolled scatter plot: index on the x axis, one marker shape per
/// series (discs for the first, crosses for the second). Deterministic
/// output, no external charting dependency.
void write_scatter_svg(std::ostream& out, const std::string& title,
                       const std::vector<PlotSeries>& series);

}  // namespace symtoep::cli
