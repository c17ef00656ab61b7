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

#ifndef SYNLEARN_EXPERIMENTS_SVG_PLOT_H
#define SYNLEARN_EXPERIMENTS_SVG_PLOT_H

#include <string>
#include <string_view>
#include <vector>

namespace synlearn::plot {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    /// Optional vertical error bars; empty or same length as y.
    std::vector<double> y_lo;
    std::vector<double> y_hi;
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

/// Static log-log SVG. Nonpositive values are skipped. Throws
/// std::invalid_argument when no positive point remains.
std::string render_svg(const Chart &chart);

/// Builds a chart from an experiment CSV, recognising the accuracy,
/// shots-needed and LEP-comparison layouts by their header.
Chart chart_from_csv(std::string_view csv, const std::string &title);

}  // namespace synlearn::plot

#endif
