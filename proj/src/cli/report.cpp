#include "simplicity/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

namespace simplicity::cli {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double opt(const std::optional<double>& v) {
    return v ? *v : kNaN;
}

}  // namespace

void write_sweep_csv(std::ostream& os, std::span<const SweepPoint> sweep) {
    os << "T,p,q,h_mu,C_mu,C_q,E\n";
    for (const auto& pt : sweep) {
        const double p = pt.probs ? pt.probs->p : kNaN;
        const double q = pt.probs ? pt.probs->q : kNaN;
        const double h = pt.profile ? pt.profile->h_mu : kNaN;
        const double cmu = pt.profile ? pt.profile->C_mu : kNaN;
        const double cq = pt.profile ? opt(pt.profile->C_q) : kNaN;
        const double e = pt.profile ? opt(pt.profile->E) : kNaN;
        os << format_number(pt.T) << ',' << format_number(p) << ',' << format_number(q) << ',' << format_number(h)
           << ',' << format_number(cmu) << ',' << format_number(cq) << ',' << format_number(e) << '\n';
    }
}

static nlohmann::json profile_object(const ComplexityProfile& p) {
    nlohmann::json j;
    j["h_mu"] = p.h_mu;
    j["C_mu"] = p.C_mu;
    j["C_q"] = p.C_q ? nlohmann::json(*p.C_q) : nlohmann::json(nullptr);
    j["E"] = p.E ? nlohmann::json(*p.E) : nlohmann::json(nullptr);
    j["L_used"] = p.L_used;
    j["sandwich_ok"] = satisfies_sandwich(p);
    return j;
}

void write_sweep_json(std::ostream& os, std::span<const SweepPoint> sweep) {
    auto rows = nlohmann::json::array();
    for (const auto& pt : sweep) {
        nlohmann::json row;
        row["T"] = pt.T;
        if (pt.probs) {
            row["p"] = pt.probs->p;
            row["q"] = pt.probs->q;
        }
        if (pt.profile) row["profile"] = profile_object(*pt.profile);
        if (!pt.error.empty()) row["error"] = pt.error;
        rows.push_back(std::move(row));
    }
    os << rows.dump(2) << '\n';
}

void write_sweep_svg(std::ostream& os, std::span<const SweepPoint> sweep) {
    constexpr double width = 640, height = 400, left = 60, right = 20, top = 20, bottom = 50;
    const double plot_w = width - left - right, plot_h = height - top - bottom;

    double t_lo = std::numeric_limits<double>::infinity(), t_hi = -t_lo, y_hi = 0.0;
    for (const auto& pt : sweep) {
        t_lo = std::min(t_lo, pt.T);
        t_hi = std::max(t_hi, pt.T);
        if (pt.profile) y_hi = std::max(y_hi, pt.profile->C_mu);
    }
    if (!(y_hi > 0.0)) y_hi = 1.0;
    if (!(t_hi > t_lo)) t_hi = t_lo + 1.0;
    auto sx = [&](double t) { return left + (t - t_lo) / (t_hi - t_lo) * plot_w; };
    auto sy = [&](double y) { return top + plot_h - y / y_hi * plot_h; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<g stroke=\"black\" fill=\"none\"><line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\""
       << left + plot_w << "\" y2=\"" << top + plot_h << "\"/><line x1=\"" << left << "\" y1=\"" << top << "\" x2=\""
       << left << "\" y2=\"" << top + plot_h << "\"/></g>\n";
    os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int k = 0; k <= 5; ++k) {
        const double t = t_lo + (t_hi - t_lo) * k / 5.0;
        os << "<text x=\"" << sx(t) << "\" y=\"" << top + plot_h + 15 << "\" text-anchor=\"middle\">"
           << format_number(std::round(t * 100) / 100) << "</text>\n";
        const double y = y_hi * k / 5.0;
        os << "<text x=\"" << left - 5 << "\" y=\"" << sy(y) + 4 << "\" text-anchor=\"end\">"
           << format_number(std::round(y * 100) / 100) << "</text>\n";
    }
    os << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">T [J/k_B]</text>\n";
    os << "</g>\n";

    struct Series {
        Measure field;
        const char* color;
    };
    const Series series[] = {{Measure::C_mu, "#1f77b4"}, {Measure::C_q, "#d62728"}, {Measure::E, "#2ca02c"}};
    int legend = 0;
    for (const auto& s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& pt : sweep) {
            if (!pt.profile) continue;
            os << format_number(sx(pt.T)) << ',' << format_number(sy(measure_value(*pt.profile, s.field))) << ' ';
        }
        os << "\"/>\n";
        const double ly = top + 15 + 15 * legend++;
        os << "<text x=\"" << left + plot_w - 60 << "\" y=\"" << ly << "\" fill=\"" << s.color
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << to_string(s.field) << "</text>\n";
    }
    os << "</svg>\n";
}

void write_grid_csv(std::ostream& os, const AmbiguityGrid& grid) {
    os << "T1,T2,plain,certain\n";
    const std::size_t n = grid.resolution;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& v = grid.at(i, j);
            os << format_number(grid.temperatures[i]) << ',' << format_number(grid.temperatures[j]) << ','
               << to_string(v.plain) << ',' << to_string(v.certain) << '\n';
        }
}

void write_grid_json(std::ostream& os, const AmbiguityGrid& grid) {
    nlohmann::json doc;
    doc["J"] = grid.J;
    doc["b"] = grid.b;
    doc["T_max"] = grid.T_max;
    doc["resolution"] = grid.resolution;
    doc["mode"] = to_string(grid.mode);
    doc["temperatures"] = grid.temperatures;
    auto plain = nlohmann::json::array();
    auto certain = nlohmann::json::array();
    for (std::size_t i = 0; i < grid.resolution; ++i) {
        auto prow = nlohmann::json::array();
        auto crow = nlohmann::json::array();
        for (std::size_t j = 0; j < grid.resolution; ++j) {
            prow.push_back(to_string(grid.at(i, j).plain));
            crow.push_back(to_string(grid.at(i, j).certain));
        }
        plain.push_back(std::move(prow));
        certain.push_back(std::move(crow));
    }
    doc["plain"] = std::move(plain);
    doc["certain"] = std::move(certain);
    os << doc.dump() << '\n';
}

void write_grid_svg(std::ostream& os, const AmbiguityGrid& grid) {
    constexpr double cell = 2.0, margin = 50.0;
    const std::size_t n = grid.resolution;
    const double side = cell * static_cast<double>(n);
    auto color = [&](const AmbiguityVerdict& v) -> std::string_view {
        if (grid.mode == DiagramMode::plain) {
            switch (v.plain) {
                case PlainVerdict::consistent: return "#4575b4";
                case PlainVerdict::ambiguous: return "#d73027";
                case PlainVerdict::tied: return "#ffffff";
            }
        }
        switch (v.certain) {
            case CertainVerdict::certainly_consistent: return "#4575b4";
            case CertainVerdict::certainly_ambiguous: return "#d73027";
            case CertainVerdict::indeterminate: return "#fee090";
        }
        return "#000000";
    };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side + 2 * margin << "\" height=\""
       << side + 2 * margin << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g shape-rendering=\"crispEdges\">\n";
    // x = T1 (row index i), y = T2 upwards; runs of equal colour share one rect.
    for (std::size_t j = 0; j < n; ++j) {
        const double y = margin + side - cell * static_cast<double>(j + 1);
        std::size_t start = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (i < n && color(grid.at(i, j)) == color(grid.at(start, j))) continue;
            os << "<rect x=\"" << margin + cell * static_cast<double>(start) << "\" y=\"" << y << "\" width=\""
               << cell * static_cast<double>(i - start) << "\" height=\"" << cell << "\" fill=\""
               << color(grid.at(start, j)) << "\"/>\n";
            start = i;
        }
    }
    os << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int t = 0; t <= static_cast<int>(std::floor(grid.T_max)); ++t) {
        const double offset = side * t / grid.T_max;
        os << "<text x=\"" << margin + offset << "\" y=\"" << margin + side + 15 << "\" text-anchor=\"middle\">" << t
           << "</text>\n";
        os << "<text x=\"" << margin - 5 << "\" y=\"" << margin + side - offset + 4 << "\" text-anchor=\"end\">" << t
           << "</text>\n";
    }
    os << "<text x=\"" << margin + side / 2 << "\" y=\"" << side + 2 * margin - 10
       << "\" text-anchor=\"middle\">T1</text>\n";
    os << "<text x=\"15\" y=\"" << margin + side / 2 << "\" text-anchor=\"middle\">T2</text>\n</g>\n</svg>\n";
}

std::string profile_json(const ComplexityProfile& p) {
    return profile_object(p).dump(2);
}

void write_profile_csv(std::ostream& os, const ComplexityProfile& p) {
    os << "h_mu,C_mu,C_q,E,L_used\n"
       << format_number(p.h_mu) << ',' << format_number(p.C_mu) << ',' << format_number(opt(p.C_q)) << ','
       << format_number(opt(p.E)) << ',' << p.L_used << '\n';
}

}  // namespace simplicity::cli
