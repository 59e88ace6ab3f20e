#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mimicry/estimate.hpp"
#include "mimicry/sensitivity.hpp"

namespace mimicry {

struct ForestRow {
  std::string label;
  double rd = 0.0;
  Interval rd_ci;
  std::optional<double> rr;
  std::optional<Interval> rr_ci;
  std::optional<double> baseline_rd;
  std::optional<Interval> baseline_rd_ci;
};

/// Two-panel forest plot: RD with CI bars and the baseline overlay, and RR
/// on the right. Rows without an RR are left out of the RR panel and
/// counted in a legend note. Throws Error for no rows.
std::string forest_plot_svg(std::span<const ForestRow> rows);

struct DosePoint {
  double midpoint = 0.0;
  double rd = 0.0;
  Interval ci;
};

/// Per-bin RD against delay with the fitted line. Throws Error for no points.
std::string dose_plot_svg(std::string_view title, std::span<const DosePoint> points, double slope, double intercept);

/// (lambda, delta) boundary at one gamma on log-log axes. Throws Error for
/// an empty curve.
std::string boundary_plot_svg(std::string_view title, double gamma, std::span<const AmplificationPoint> curve);

/// Forest rows for every estimated item and anchor attribute of a results
/// document.
std::vector<ForestRow> forest_rows(const nlohmann::json& results);

/// Writes forest.svg, dose_<item>.svg and sensitivity_<item>.svg into dir.
/// Plots without data are skipped with a line on `notices`. Returns the
/// file names written.
std::vector<std::string> emit_plots(const nlohmann::json& results, const std::filesystem::path& dir,
                                    std::ostream& notices);

}  // namespace mimicry
