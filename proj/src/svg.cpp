#include "topobench/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace topobench {

namespace {

// Chart geometry.
constexpr double kWidth = 760.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 600.0;   // plot area right edge; legend sits beyond
constexpr double kTop = 48.0;
constexpr double kBottom = 408.0;  // plot area bottom edge

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#8c564b", "#e377c2"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream stream(text);
    std::string line;
    bool first = true;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream fs(line);
        while (std::getline(fs, field, ',')) fields.push_back(field);
        if (line.back() == ',') fields.push_back("");
        if (first) {
            csv.header = std::move(fields);
            first = false;
        } else {
            if (fields.size() != csv.header.size())
                throw std::runtime_error(
                    "malformed CSV: row has wrong column count");
            csv.rows.push_back(std::move(fields));
        }
    }
    if (csv.header.empty()) throw std::runtime_error("malformed CSV: empty");
    return csv;
}

double parse_number(const std::string& s, const char* column) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("malformed CSV: bad number \"" + s +
                                 "\" in column " + column);
    }
}

void open_svg(std::ostringstream& out, const std::string& title) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" fill=\"white\"/>\n"
        << "<text x=\"" << fmt((kLeft + kRight) / 2) << "\" y=\"24\" "
        << "text-anchor=\"middle\" font-size=\"15\">" << escape_xml(title)
        << "</text>\n";
}

void draw_axes(std::ostringstream& out, const std::string& x_label,
               const std::string& y_label) {
    out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kBottom)
        << "\" x2=\"" << fmt(kRight) << "\" y2=\"" << fmt(kBottom)
        << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop)
        << "\" x2=\"" << fmt(kLeft) << "\" y2=\"" << fmt(kBottom)
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fmt((kLeft + kRight) / 2) << "\" y=\""
        << fmt(kBottom + 40) << "\" text-anchor=\"middle\">"
        << escape_xml(x_label) << "</text>\n"
        << "<text x=\"18\" y=\"" << fmt((kTop + kBottom) / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << fmt((kTop + kBottom) / 2) << ")\">" << escape_xml(y_label)
        << "</text>\n";
}

void draw_marker(std::ostringstream& out, int city_index, double x, double y,
                 const char* css_class) {
    const char* color = kPalette[city_index % 6];
    switch (city_index % 4) {
        case 0:
            out << "<circle class=\"" << css_class << "\" cx=\"" << fmt(x)
                << "\" cy=\"" << fmt(y) << "\" r=\"4\" fill=\"" << color
                << "\"/>\n";
            break;
        case 1:
            out << "<polygon class=\"" << css_class << "\" points=\"" << fmt(x)
                << "," << fmt(y - 5) << " " << fmt(x - 4.5) << "," << fmt(y + 4)
                << " " << fmt(x + 4.5) << "," << fmt(y + 4) << "\" fill=\""
                << color << "\"/>\n";
            break;
        case 2:
            out << "<rect class=\"" << css_class << "\" x=\"" << fmt(x - 4)
                << "\" y=\"" << fmt(y - 4)
                << "\" width=\"8\" height=\"8\" fill=\"" << color << "\"/>\n";
            break;
        default:
            out << "<polygon class=\"" << css_class << "\" points=\"" << fmt(x)
                << "," << fmt(y - 5.5) << " " << fmt(x + 5.5) << "," << fmt(y)
                << " " << fmt(x) << "," << fmt(y + 5.5) << " " << fmt(x - 5.5)
                << "," << fmt(y) << "\" fill=\"" << color << "\"/>\n";
    }
}

void draw_legend(std::ostringstream& out,
                 const std::vector<std::string>& cities, bool swatches) {
    double y = kTop + 10;
    for (std::size_t i = 0; i < cities.size(); ++i) {
        if (swatches) {
            out << "<rect x=\"" << fmt(kRight + 16) << "\" y=\"" << fmt(y - 8)
                << "\" width=\"12\" height=\"12\" fill=\""
                << kPalette[i % 6] << "\"/>\n";
        } else {
            draw_marker(out, static_cast<int>(i), kRight + 22, y - 2,
                        "legend-marker");
        }
        out << "<text x=\"" << fmt(kRight + 34) << "\" y=\"" << fmt(y + 2)
            << "\">" << escape_xml(cities[i]) << "</text>\n";
        y += 20;
    }
}

struct LinearScale {
    double lo = 0.0, hi = 1.0, px_lo = 0.0, px_hi = 1.0;

    double operator()(double v) const {
        return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo);
    }
};

void pad_range(double& lo, double& hi) {
    if (lo > hi) std::swap(lo, hi);
    double span = hi - lo;
    if (span <= 0.0) span = 1.0;
    lo -= 0.06 * span;
    hi += 0.06 * span;
}

void draw_ticks(std::ostringstream& out, const LinearScale& xs,
                const LinearScale& ys) {
    for (int t = 0; t <= 5; ++t) {
        double vx = xs.lo + (xs.hi - xs.lo) * t / 5.0;
        double px = xs(vx);
        out << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(kBottom)
            << "\" x2=\"" << fmt(px) << "\" y2=\"" << fmt(kBottom + 5)
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(kBottom + 18)
            << "\" text-anchor=\"middle\">" << fmt_tick(vx) << "</text>\n";
        double vy = ys.lo + (ys.hi - ys.lo) * t / 5.0;
        double py = ys(vy);
        out << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(py)
            << "\" x2=\"" << fmt(kLeft) << "\" y2=\"" << fmt(py)
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(py + 4)
            << "\" text-anchor=\"end\">" << fmt_tick(vy) << "</text>\n";
    }
}

std::string render_scatter(const Csv& csv, const std::string& x_label,
                           const std::string& title) {
    struct Point {
        std::string city;
        double x, y, limit;
    };
    std::vector<Point> points;
    std::set<std::string> city_set;
    std::set<double> limits;
    for (const auto& row : csv.rows) {
        Point p;
        p.city = row[0];
        p.x = parse_number(row[2], csv.header[2].c_str());
        p.y = parse_number(row[3], "approximation_ratio");
        p.limit = parse_number(row[5], "trivial_limit");
        city_set.insert(p.city);
        limits.insert(p.limit);
        points.push_back(std::move(p));
    }
    std::vector<std::string> cities(city_set.begin(), city_set.end());
    auto city_index = [&](const std::string& c) {
        return static_cast<int>(std::lower_bound(cities.begin(), cities.end(),
                                                 c) -
                                cities.begin());
    };

    double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
    if (!points.empty()) {
        x_lo = x_hi = points[0].x;
        y_lo = y_hi = points[0].y;
        for (const Point& p : points) {
            x_lo = std::min(x_lo, p.x);
            x_hi = std::max(x_hi, p.x);
            y_lo = std::min(y_lo, p.y);
            y_hi = std::max(y_hi, p.y);
        }
        for (double limit : limits) {
            y_lo = std::min(y_lo, limit);
            y_hi = std::max(y_hi, limit);
        }
    }
    pad_range(x_lo, x_hi);
    pad_range(y_lo, y_hi);

    LinearScale xs{x_lo, x_hi, kLeft, kRight};
    LinearScale ys{y_lo, y_hi, kBottom, kTop};

    std::ostringstream out;
    open_svg(out, title);
    draw_axes(out, x_label, "approximation ratio");
    draw_ticks(out, xs, ys);

    bool labeled = false;
    for (double limit : limits) {
        double py = ys(limit);
        out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(py)
            << "\" x2=\"" << fmt(kRight) << "\" y2=\"" << fmt(py)
            << "\" stroke=\"#888888\" stroke-dasharray=\"6,4\"/>\n";
        if (!labeled) {
            out << "<text x=\"" << fmt(kRight - 4) << "\" y=\"" << fmt(py - 4)
                << "\" text-anchor=\"end\" fill=\"#888888\">trivial limit"
                << "</text>\n";
            labeled = true;
        }
    }

    for (const Point& p : points)
        draw_marker(out, city_index(p.city), xs(p.x), ys(p.y), "marker");

    draw_legend(out, cities, /*swatches=*/false);
    out << "</svg>\n";
    return out.str();
}

std::string render_outcome_bars(const Csv& csv) {
    struct Bar {
        std::string city;
        int n;
        std::string classification;
        double count;
    };
    std::vector<Bar> bars;
    std::set<std::string> city_set;
    std::set<int> n_set;
    double max_count = 0.0;
    for (const auto& row : csv.rows) {
        Bar b;
        b.city = row[0];
        b.n = static_cast<int>(parse_number(row[1], "N"));
        b.classification = row[2];
        b.count = parse_number(row[3], "count");
        max_count = std::max(max_count, b.count);
        city_set.insert(b.city);
        n_set.insert(b.n);
        bars.push_back(std::move(b));
    }
    if (max_count <= 0.0) max_count = 1.0;

    std::vector<std::string> cities(city_set.begin(), city_set.end());
    auto city_index = [&](const std::string& c) {
        return static_cast<int>(std::lower_bound(cities.begin(), cities.end(),
                                                 c) -
                                cities.begin());
    };

    // One column per (N, classification), one bar per city inside it.
    const char* class_order[] = {"optimal", "suboptimal", "trivial"};
    std::vector<std::pair<int, std::string>> columns;
    for (int n : n_set)
        for (const char* c : class_order) columns.emplace_back(n, c);
    auto column_index = [&](int n, const std::string& c) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i].first == n && columns[i].second == c)
                return static_cast<int>(i);
        return -1;
    };

    LinearScale ys{0.0, max_count * 1.1, kBottom, kTop};

    std::ostringstream out;
    open_svg(out, "QAOA outcome counts");
    draw_axes(out, "outcome", "runs");

    // Integer y ticks.
    int step = std::max(1, static_cast<int>(std::ceil(max_count / 5.0)));
    for (int v = 0; v <= static_cast<int>(max_count); v += step) {
        double py = ys(v);
        out << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(py)
            << "\" x2=\"" << fmt(kLeft) << "\" y2=\"" << fmt(py)
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(py + 4)
            << "\" text-anchor=\"end\">" << v << "</text>\n";
    }

    double span = kRight - kLeft;
    double column_width =
        columns.empty() ? span : span / static_cast<double>(columns.size());
    double bar_width =
        cities.empty()
            ? column_width
            : column_width / (static_cast<double>(cities.size()) + 1.0);

    for (const Bar& b : bars) {
        int col = column_index(b.n, b.classification);
        if (col < 0)
            throw std::runtime_error("malformed CSV: unknown classification \"" +
                                     b.classification + "\"");
        int city = city_index(b.city);
        double x0 = kLeft + col * column_width +
                    bar_width * (0.5 + static_cast<double>(city));
        double y_top = ys(b.count);
        out << "<rect class=\"bar\" x=\"" << fmt(x0) << "\" y=\"" << fmt(y_top)
            << "\" width=\"" << fmt(bar_width) << "\" height=\""
            << fmt(kBottom - y_top) << "\" fill=\"" << kPalette[city % 6]
            << "\"/>\n";
    }

    for (std::size_t i = 0; i < columns.size(); ++i) {
        double cx = kLeft + (static_cast<double>(i) + 0.5) * column_width;
        out << "<text x=\"" << fmt(cx) << "\" y=\"" << fmt(kBottom + 16)
            << "\" text-anchor=\"middle\" font-size=\"10\">"
            << escape_xml(columns[i].second) << "</text>\n"
            << "<text x=\"" << fmt(cx) << "\" y=\"" << fmt(kBottom + 28)
            << "\" text-anchor=\"middle\" font-size=\"10\">N="
            << columns[i].first << "</text>\n";
    }

    draw_legend(out, cities, /*swatches=*/true);
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_figure_from_csv(const std::string& csv_text) {
    Csv csv = parse_csv(csv_text);
    const auto& h = csv.header;
    if (h.size() == 4 && h[0] == "city" && h[1] == "N" &&
        h[2] == "classification" && h[3] == "count")
        return render_outcome_bars(csv);
    if (h.size() == 6 && h[0] == "city" && h[2] == "fiedler")
        return render_scatter(csv, "algebraic connectivity (Fiedler value)",
                              "Approximation ratio vs connectivity");
    if (h.size() == 6 && h[0] == "city" && h[2] == "degree_variance")
        return render_scatter(csv, "degree variance",
                              "Approximation ratio vs degree variance");
    throw std::runtime_error("malformed CSV: unrecognized header");
}

}  // namespace topobench
