#pragma once

#include <string>
#include <string_view>

#include "topobench/harness.hpp"

namespace topobench {

enum class PlotKind {
    kOutcomeBars,          // city,N,classification,count
    kConnectivityScatter,  // city,N,fiedler,approximation_ratio,...
    kVarianceScatter,      // city,N,degree_variance,approximation_ratio,...
};

// Accepts "outcome_bars", "connectivity_scatter", "variance_scatter".
PlotKind plot_kind_from_string(std::string_view s);

// CSV text for one figure kind; headers are fixed (docs/FORMATS.md).
// outcome_bars emits one row per (city, N, classification) with zero counts
// included; the scatter kinds emit one row per run, carrying the
// trivial-limit ratio N/true_opt so figures can draw the guide line.
std::string emit_plot_data(const std::vector<RunResult>& results,
                           PlotKind kind);

}  // namespace topobench
