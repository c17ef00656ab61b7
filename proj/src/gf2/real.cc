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

#include "synlearn/gf2/real.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace synlearn::linalg {

namespace {

Eigen::MatrixXd to_eigen(const RealMatrix &m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m.at(r, c);
        }
    }
    return out;
}

}  // namespace

bool RealMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

LstsqResult lstsq_solve(const RealMatrix &m, std::span<const double> rhs) {
    if (rhs.size() != m.rows()) {
        throw std::invalid_argument(
            "lstsq_solve: rhs has length " + std::to_string(rhs.size()) + " but the matrix has " +
            std::to_string(m.rows()) + " rows.");
    }
    if (!m.all_finite()) {
        throw std::invalid_argument("lstsq_solve: matrix has non-finite entries.");
    }
    if (!std::all_of(rhs.begin(), rhs.end(), [](double v) { return std::isfinite(v); })) {
        throw std::invalid_argument("lstsq_solve: rhs has non-finite entries.");
    }
    Eigen::MatrixXd a = to_eigen(m);
    Eigen::VectorXd b(static_cast<Eigen::Index>(rhs.size()));
    for (size_t i = 0; i < rhs.size(); i++) {
        b(static_cast<Eigen::Index>(i)) = rhs[i];
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    auto r = static_cast<size_t>(qr.rank());
    if (r < m.cols()) {
        std::vector<size_t> deficient;
        const auto &perm = qr.colsPermutation().indices();
        for (size_t k = r; k < m.cols(); k++) {
            deficient.push_back(static_cast<size_t>(perm(static_cast<Eigen::Index>(k))));
        }
        std::sort(deficient.begin(), deficient.end());
        std::string cols;
        for (size_t c : deficient) {
            cols += (cols.empty() ? "" : ", ") + std::to_string(c);
        }
        throw RankDeficientError(
            "lstsq_solve: matrix has column rank " + std::to_string(r) + " < " + std::to_string(m.cols()) +
                "; dependent columns: " + cols + ".",
            std::move(deficient));
    }
    Eigen::VectorXd x = qr.solve(b);
    LstsqResult out;
    out.x.assign(x.data(), x.data() + x.size());
    out.residual = (a * x - b).norm();
    return out;
}

SingularValueRange singular_value_range(const RealMatrix &m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return {};
    }
    Eigen::MatrixXd a = to_eigen(m);
    if (m.rows() >= 2 * m.cols()) {
        // Tall designs: eigenvalues of the small Gram matrix are far cheaper
        // than a full SVD and accurate to eps * sigma_max^2.
        Eigen::MatrixXd gram = a.transpose() * a;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
        const auto &ev = eig.eigenvalues();
        return {std::sqrt(std::max(0.0, ev.minCoeff())), std::sqrt(std::max(0.0, ev.maxCoeff()))};
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto &s = svd.singularValues();
    SingularValueRange out{s.minCoeff(), s.maxCoeff()};
    if (m.rows() < m.cols()) {
        out.min = 0;
    }
    return out;
}

size_t numerical_rank(const RealMatrix &m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
    const auto &s = svd.singularValues();
    double cutoff = std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(m.rows(), m.cols())) *
                    s.maxCoeff();
    size_t r = 0;
    for (Eigen::Index i = 0; i < s.size(); i++) {
        if (s(i) > cutoff) {
            r++;
        }
    }
    return r;
}

}  // namespace synlearn::linalg
