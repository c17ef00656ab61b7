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

#include "synlearn/experiments/fit.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace synlearn::stats {

LinearFit fit_line(const std::vector<double> &xs, const std::vector<double> &ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("fit_line: x and y lengths differ.");
    }
    if (xs.size() < 2) {
        throw std::invalid_argument("fit_line: need at least two points.");
    }
    const double mx = mean(xs);
    const double my = mean(ys);
    double sxx = 0;
    double sxy = 0;
    double syy = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0) {
        throw std::invalid_argument("fit_line: x values are all equal.");
    }
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.points = xs.size();
    double ss_res = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        double e = ys[i] - (f.slope * xs[i] + f.intercept);
        ss_res += e * e;
    }
    f.r2 = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
    return f;
}

LinearFit fit_loglog(const std::vector<double> &xs, const std::vector<double> &ys) {
    std::vector<double> lx;
    std::vector<double> ly;
    for (size_t i = 0; i < xs.size() && i < ys.size(); i++) {
        if (!(xs[i] > 0) || !(ys[i] > 0)) {
            throw std::invalid_argument("fit_loglog: values must be positive.");
        }
        lx.push_back(std::log10(xs[i]));
        ly.push_back(std::log10(ys[i]));
    }
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("fit_loglog: x and y lengths differ.");
    }
    return fit_line(lx, ly);
}

double mean(const std::vector<double> &v) {
    if (v.empty()) {
        return 0;
    }
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_std(const std::vector<double> &v) {
    if (v.size() < 2) {
        return 0;
    }
    double m = mean(v);
    double s = 0;
    for (double x : v) {
        s += (x - m) * (x - m);
    }
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

double quantile(std::vector<double> v, double f) {
    if (v.empty()) {
        throw std::invalid_argument("quantile: empty input.");
    }
    std::sort(v.begin(), v.end());
    double pos = std::clamp(f, 0.0, 1.0) * static_cast<double>(v.size() - 1);
    size_t lo = static_cast<size_t>(std::floor(pos));
    size_t hi = std::min(lo + 1, v.size() - 1);
    double t = pos - static_cast<double>(lo);
    return v[lo] + t * (v[hi] - v[lo]);
}

std::optional<double> loglog_crossing(const std::vector<double> &xs, const std::vector<double> &ys, double target) {
    if (!(target > 0)) {
        return std::nullopt;
    }
    for (size_t i = 0; i + 1 < xs.size() && i + 1 < ys.size(); i++) {
        double y0 = ys[i];
        double y1 = ys[i + 1];
        if (!(y0 > 0) || !(y1 > 0) || !(xs[i] > 0) || !(xs[i + 1] > 0)) {
            continue;
        }
        if (y0 >= target && y1 <= target) {
            double l0 = std::log10(y0);
            double l1 = std::log10(y1);
            double t = l0 == l1 ? 0.0 : (l0 - std::log10(target)) / (l0 - l1);
            double lx = std::log10(xs[i]) + t * (std::log10(xs[i + 1]) - std::log10(xs[i]));
            return std::pow(10.0, lx);
        }
    }
    return std::nullopt;
}

}  // namespace synlearn::stats
