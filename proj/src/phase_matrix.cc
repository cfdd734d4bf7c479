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

#include "qmub/phase_matrix.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmub {

PhaseMatrix::PhaseMatrix(int dim, Amplitude amplitude)
    : dim_(dim), amplitude_(amplitude), entries_((size_t)dim * dim) {
    if (dim <= 0) {
        throw std::invalid_argument("PhaseMatrix dimension must be positive");
    }
}

PhaseMatrix PhaseMatrix::identity(int dim) {
    PhaseMatrix m(dim, Amplitude::kOne);
    for (int k = 0; k < dim; k++) {
        m.set(k, k, ExactPhase());
    }
    return m;
}

PhaseMatrix PhaseMatrix::diagonal(const std::vector<ExactPhase> &phases) {
    PhaseMatrix m((int)phases.size(), Amplitude::kOne);
    for (int k = 0; k < m.dim(); k++) {
        m.set(k, k, phases[k]);
    }
    return m;
}

double PhaseMatrix::amplitude_value() const {
    return amplitude_ == Amplitude::kOne ? 1.0 : 1.0 / std::sqrt((double)dim_);
}

bool PhaseMatrix::is_monomial() const {
    std::vector<int> rows(dim_), cols(dim_);
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            if (at(i, j).has_value()) {
                if (++rows[i] > 1 || ++cols[j] > 1) {
                    return false;
                }
            }
        }
    }
    return true;
}

ComplexMatrix PhaseMatrix::to_complex() const {
    ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
    double s = amplitude_value();
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            if (at(i, j)) {
                out(i, j) = s * at(i, j)->to_complex();
            }
        }
    }
    return out;
}

PhaseMatrix PhaseMatrix::adjoint() const {
    PhaseMatrix out(dim_, amplitude_);
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            if (at(i, j)) {
                out.set(j, i, at(i, j)->conj());
            }
        }
    }
    return out;
}

PhaseMatrix PhaseMatrix::transpose() const {
    PhaseMatrix out(dim_, amplitude_);
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            out.set(j, i, at(i, j));
        }
    }
    return out;
}

PhaseMatrix PhaseMatrix::scaled(const ExactPhase &s) const {
    PhaseMatrix out = *this;
    for (auto &e : out.entries_) {
        if (e) {
            *e *= s;
        }
    }
    return out;
}

ComplexVector PhaseMatrix::column(int col) const {
    ComplexVector v = ComplexVector::Zero(dim_);
    double s = amplitude_value();
    for (int i = 0; i < dim_; i++) {
        if (at(i, col)) {
            v(i) = s * at(i, col)->to_complex();
        }
    }
    return v;
}

PhaseSum PhaseMatrix::trace_phases() const {
    PhaseSum s;
    for (int k = 0; k < dim_; k++) {
        if (at(k, k)) {
            s.add(*at(k, k));
        }
    }
    return s;
}

MatrixProduct multiply(const PhaseMatrix &a, const PhaseMatrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("multiply: dimension mismatch");
    }
    int d = a.dim();
    bool both_scaled = a.amplitude() == Amplitude::kInvSqrtDim && b.amplitude() == Amplitude::kInvSqrtDim;
    if (!both_scaled) {
        Amplitude amp = (a.amplitude() == Amplitude::kOne && b.amplitude() == Amplitude::kOne)
                            ? Amplitude::kOne
                            : Amplitude::kInvSqrtDim;
        PhaseMatrix out(d, amp);
        bool exact = true;
        for (int i = 0; i < d && exact; i++) {
            for (int k = 0; k < d && exact; k++) {
                if (!a.at(i, k)) {
                    continue;
                }
                for (int j = 0; j < d; j++) {
                    if (!b.at(k, j)) {
                        continue;
                    }
                    if (out.at(i, j)) {
                        exact = false;
                        break;
                    }
                    out.set(i, j, *a.at(i, k) * *b.at(k, j));
                }
            }
        }
        if (exact) {
            return out;
        }
    }
    return ComplexMatrix(a.to_complex() * b.to_complex());
}

PhaseMatrix exact_multiply(const PhaseMatrix &a, const PhaseMatrix &b) {
    auto p = multiply(a, b);
    if (auto *m = std::get_if<PhaseMatrix>(&p)) {
        return *m;
    }
    throw std::domain_error("product is not representable as a PhaseMatrix");
}

PhaseMatrix exact_pow(const PhaseMatrix &m, std::int64_t k) {
    if (m.amplitude() != Amplitude::kOne || !m.is_monomial()) {
        throw std::domain_error("exact_pow needs a monomial matrix with unit amplitude");
    }
    PhaseMatrix base = k < 0 ? m.adjoint() : m;
    std::int64_t n = k < 0 ? -k : k;
    PhaseMatrix result = PhaseMatrix::identity(m.dim());
    while (n > 0) {
        if (n & 1) {
            result = exact_multiply(result, base);
        }
        base = exact_multiply(base, base);
        n >>= 1;
    }
    return result;
}

ComplexMatrix to_complex(const MatrixProduct &p) {
    if (auto *m = std::get_if<PhaseMatrix>(&p)) {
        return m->to_complex();
    }
    return std::get<ComplexMatrix>(p);
}

std::optional<PhaseMatrix> snap_to_phases(
    const ComplexMatrix &m, Amplitude amplitude, int denominator, double tol) {
    if (m.rows() != m.cols()) {
        return std::nullopt;
    }
    int d = (int)m.rows();
    PhaseMatrix out(d, amplitude);
    double s = out.amplitude_value();
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            Complex z = m(i, j);
            if (std::abs(z) <= tol) {
                continue;
            }
            double t = std::arg(z) / (2 * std::numbers::pi) * denominator;
            auto n = (std::int64_t)std::llround(t);
            ExactPhase p = ExactPhase::from_fraction(n, denominator);
            if (std::abs(s * p.to_complex() - z) > tol) {
                return std::nullopt;
            }
            out.set(i, j, p);
        }
    }
    return out;
}

}  // namespace qmub
