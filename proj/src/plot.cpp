#include "topobench/plot.hpp"

#include <cstdio>
#include <stdexcept>

namespace topobench {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

constexpr Classification kClassOrder[] = {Classification::kOptimal,
                                          Classification::kSuboptimal,
                                          Classification::kTrivial};

}  // namespace

PlotKind plot_kind_from_string(std::string_view s) {
    if (s == "outcome_bars") return PlotKind::kOutcomeBars;
    if (s == "connectivity_scatter") return PlotKind::kConnectivityScatter;
    if (s == "variance_scatter") return PlotKind::kVarianceScatter;
    throw std::runtime_error("unknown plot kind \"" + std::string(s) + "\"");
}

std::string emit_plot_data(const std::vector<RunResult>& results,
                           PlotKind kind) {
    std::string csv;
    switch (kind) {
        case PlotKind::kOutcomeBars: {
            csv = "city,N,classification,count\n";
            ClassifiedCounts agg = aggregate_counts(results);
            for (const auto& [key, per_class] : agg.counts) {
                for (Classification c : kClassOrder) {
                    csv += key.first;
                    csv += ',';
                    csv += std::to_string(key.second);
                    csv += ',';
                    csv += to_string(c);
                    csv += ',';
                    csv += std::to_string(
                        per_class[static_cast<std::size_t>(c)]);
                    csv += '\n';
                }
            }
            break;
        }
        case PlotKind::kConnectivityScatter:
        case PlotKind::kVarianceScatter: {
            bool connectivity = kind == PlotKind::kConnectivityScatter;
            csv = connectivity
                      ? "city,N,fiedler,approximation_ratio,classification,"
                        "trivial_limit\n"
                      : "city,N,degree_variance,approximation_ratio,"
                        "classification,trivial_limit\n";
            for (const RunResult& r : results) {
                double x = connectivity ? r.topology.fiedler
                                        : r.topology.degree_variance;
                double limit =
                    static_cast<double>(r.n) / static_cast<double>(r.true_opt);
                csv += r.city;
                csv += ',';
                csv += std::to_string(r.n);
                csv += ',';
                csv += format_double(x);
                csv += ',';
                csv += format_double(r.approximation_ratio);
                csv += ',';
                csv += std::string(to_string(r.classification));
                csv += ',';
                csv += format_double(limit);
                csv += '\n';
            }
            break;
        }
    }
    return csv;
}

}  // namespace topobench
