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

#ifndef SYNLEARN_EXPERIMENTS_FIT_H
#define SYNLEARN_EXPERIMENTS_FIT_H

#include <cstddef>
#include <optional>
#include <vector>

namespace synlearn::stats {

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
    size_t points = 0;
};

/// Ordinary least squares y = slope x + intercept. Throws
/// std::invalid_argument for fewer than two points, mismatched lengths or
/// constant x.
LinearFit fit_line(const std::vector<double> &xs, const std::vector<double> &ys);

/// fit_line on (log10 x, log10 y). Every value must be positive.
LinearFit fit_loglog(const std::vector<double> &xs, const std::vector<double> &ys);

double mean(const std::vector<double> &v);
/// Unbiased (n - 1) standard deviation; 0 for fewer than two values.
double sample_std(const std::vector<double> &v);
/// Linear-interpolated quantile, f in [0, 1]. Throws on empty input.
double quantile(std::vector<double> v, double f);
inline double median(std::vector<double> v) {
    return quantile(std::move(v), 0.5);
}

/// x where the polyline through (xs, ys) first crosses target downward,
/// interpolated linearly in log-log coordinates. xs must be increasing and
/// positive. nullopt when no segment brackets target.
std::optional<double> loglog_crossing(const std::vector<double> &xs, const std::vector<double> &ys, double target);

}  // namespace synlearn::stats

#endif
