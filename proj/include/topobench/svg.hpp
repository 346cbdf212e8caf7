#pragma once

#include <string>

namespace topobench {

// Renders one plot-data CSV (any kind emitted by emit_plot_data) to a
// static SVG chart: grouped bars for outcome counts, scatter with one
// marker per row and dashed trivial-limit guide lines for the ratio kinds.
// The kind is detected from the CSV header. Throws on malformed CSV.
std::string render_figure_from_csv(const std::string& csv_text);

}  // namespace topobench
