// Copyright 2026 The qmub Authors
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

#include "qmub/linalg.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmub {

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_residual(const ComplexMatrix &m) {
    ComplexMatrix id = ComplexMatrix::Identity(m.cols(), m.cols());
    return max_abs_diff(m.adjoint() * m, id);
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a * b - b * a;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); i++) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

Complex determinant(const ComplexMatrix &m) {
    return m.partialPivLu().determinant();
}

double unbiasedness_deviation(const ComplexMatrix &u, const ComplexMatrix &v) {
    ComplexMatrix g = u.adjoint() * v;
    double target = 1.0 / std::sqrt((double)u.rows());
    double worst = 0;
    for (Eigen::Index i = 0; i < g.rows(); i++) {
        for (Eigen::Index j = 0; j < g.cols(); j++) {
            worst = std::max(worst, std::abs(std::abs(g(i, j)) - target));
        }
    }
    return worst;
}

}  // namespace qmub
