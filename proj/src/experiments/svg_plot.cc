// Copyright 2026 The synlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "synlearn/experiments/svg_plot.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace synlearn::plot {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 440;
constexpr double kLeft = 80;
constexpr double kRight = 160;
constexpr double kTop = 40;
constexpr double kBottom = 60;

const char *kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

double to_num(const std::string &s) {
    if (s.empty()) {
        return std::nan("");
    }
    try {
        return std::stod(s);
    } catch (const std::exception &) {
        throw std::invalid_argument("plot: bad number '" + s + "' in CSV.");
    }
}

}  // namespace

std::string render_svg(const Chart &chart) {
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto &s : chart.series) {
        for (size_t i = 0; i < s.x.size() && i < s.y.size(); i++) {
            if (s.x[i] > 0 && s.y[i] > 0) {
                x0 = std::min(x0, std::log10(s.x[i]));
                x1 = std::max(x1, std::log10(s.x[i]));
                y0 = std::min(y0, std::log10(s.y[i]));
                y1 = std::max(y1, std::log10(s.y[i]));
                if (i < s.y_lo.size() && s.y_lo[i] > 0) {
                    y0 = std::min(y0, std::log10(s.y_lo[i]));
                }
                if (i < s.y_hi.size() && s.y_hi[i] > 0) {
                    y1 = std::max(y1, std::log10(s.y_hi[i]));
                }
            }
        }
    }
    if (!(x0 <= x1)) {
        throw std::invalid_argument("plot: no positive points to draw.");
    }
    // Whole decades on both axes.
    x0 = std::floor(x0);
    x1 = std::max(std::ceil(x1), x0 + 1);
    y0 = std::floor(y0);
    y1 = std::max(std::ceil(y1), y0 + 1);
    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double v) { return kLeft + (std::log10(v) - x0) / (x1 - x0) * pw; };
    auto py = [&](double v) { return kTop + (y1 - std::log10(v)) / (y1 - y0) * ph; };

    std::ostringstream o;
    o.precision(6);
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << kLeft + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(chart.title)
      << "</text>\n";
    for (double d = x0; d <= x1 + 1e-9; d += 1) {
        double x = kLeft + (d - x0) / (x1 - x0) * pw;
        o << "<line x1=\"" << x << "\" y1=\"" << kTop << "\" x2=\"" << x << "\" y2=\"" << kTop + ph
          << "\" stroke=\"#ddd\"/>\n";
        o << "<text x=\"" << x << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">1e" << d << "</text>\n";
    }
    for (double d = y0; d <= y1 + 1e-9; d += 1) {
        double y = kTop + (y1 - d) / (y1 - y0) * ph;
        o << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << kLeft + pw << "\" y2=\"" << y
          << "\" stroke=\"#ddd\"/>\n";
        o << "<text x=\"" << kLeft - 6 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">1e" << d << "</text>\n";
    }
    o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    o << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 16 << "\" text-anchor=\"middle\">"
      << escape(chart.x_label) << "</text>\n";
    o << "<text transform=\"translate(20," << kTop + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(chart.y_label) << "</text>\n";

    for (size_t si = 0; si < chart.series.size(); si++) {
        const Series &s = chart.series[si];
        const char *color = kColors[si % std::size(kColors)];
        std::string path;
        for (size_t i = 0; i < s.x.size() && i < s.y.size(); i++) {
            if (!(s.x[i] > 0 && s.y[i] > 0)) {
                continue;
            }
            std::ostringstream pt;
            pt.precision(6);
            pt << (path.empty() ? "M" : " L") << px(s.x[i]) << ',' << py(s.y[i]);
            path += pt.str();
            if (i < s.y_lo.size() && i < s.y_hi.size() && s.y_lo[i] > 0 && s.y_hi[i] > 0) {
                o << "<line x1=\"" << px(s.x[i]) << "\" y1=\"" << py(s.y_lo[i]) << "\" x2=\"" << px(s.x[i])
                  << "\" y2=\"" << py(s.y_hi[i]) << "\" stroke=\"" << color << "\"/>\n";
            }
            o << "<circle cx=\"" << px(s.x[i]) << "\" cy=\"" << py(s.y[i]) << "\" r=\"3\" fill=\"" << color
              << "\"/>\n";
        }
        if (!path.empty()) {
            o << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << color << "\"/>\n";
        }
        double ly = kTop + 14 + 18 * static_cast<double>(si);
        o << "<line x1=\"" << kLeft + pw + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << kLeft + pw + 32 << "\" y2=\""
          << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        o << "<text x=\"" << kLeft + pw + 38 << "\" y=\"" << ly << "\">" << escape(s.label) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

Chart chart_from_csv(std::string_view csv, const std::string &title) {
    std::stringstream ss{std::string(csv)};
    std::string line;
    if (!std::getline(ss, line)) {
        throw std::invalid_argument("plot: empty CSV.");
    }
    std::vector<std::string> header = split(line);
    std::map<std::string, size_t> col;
    for (size_t i = 0; i < header.size(); i++) {
        col[header[i]] = i;
    }
    std::vector<std::vector<std::string>> rows;
    while (std::getline(ss, line)) {
        if (!line.empty()) {
            rows.push_back(split(line));
        }
    }
    auto get = [&](const std::vector<std::string> &row, const std::string &name) {
        auto it = col.find(name);
        if (it == col.end() || it->second >= row.size()) {
            return std::nan("");
        }
        return to_num(row[it->second]);
    };

    Chart chart;
    chart.title = title;
    if (col.count("tau_median")) {
        chart.x_label = "shots N";
        chart.y_label = "max relative prior error (median)";
        std::map<double, Series> by_p;
        for (const auto &row : rows) {
            double p = get(row, "p");
            Series &s = by_p[p];
            std::ostringstream label;
            label << "p = " << p;
            s.label = label.str();
            s.x.push_back(get(row, "shots"));
            s.y.push_back(get(row, "tau_median"));
            s.y_lo.push_back(get(row, "tau_q25"));
            s.y_hi.push_back(get(row, "tau_q75"));
        }
        for (auto &[p, s] : by_p) {
            chart.series.push_back(std::move(s));
        }
    } else if (col.count("shots_needed")) {
        chart.x_label = "physical error rate p";
        chart.y_label = "shots needed";
        Series s;
        s.label = "interpolated";
        for (const auto &row : rows) {
            s.x.push_back(get(row, "p"));
            s.y.push_back(get(row, "shots_needed"));
        }
        chart.series.push_back(std::move(s));
    } else if (col.count("sampled_std") && col.count("exact")) {
        chart.x_label = "shots N";
        chart.y_label = "relative error std / exact";
        Series pred;
        Series samp;
        pred.label = "predicted";
        samp.label = "sampled";
        for (const auto &row : rows) {
            double exact = get(row, "exact");
            pred.x.push_back(get(row, "shots"));
            pred.y.push_back(get(row, "predicted_std") / exact);
            samp.x.push_back(get(row, "shots"));
            samp.y.push_back(get(row, "sampled_std") / exact);
        }
        chart.series.push_back(std::move(pred));
        chart.series.push_back(std::move(samp));
    } else {
        throw std::invalid_argument("plot: unrecognised CSV header '" + std::string(csv.substr(0, csv.find('\n'))) + "'.");
    }
    return chart;
}

}  // namespace synlearn::plot
