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

#include "qmub/qdft.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qmub {

void QdftParams::validate() const {
    if (d < 2) {
        throw std::invalid_argument("d must be at least 2, got " + std::to_string(d));
    }
    if (a < 0 || a >= d) {
        throw std::invalid_argument("a must lie in [0, d), got " + std::to_string(a));
    }
}

namespace {

// The float-path exponents mirror the exact ones with r as a double.
double fra_exponent_real(int d, double r, int a, int n, int m) {
    return n * (d - n) * a / 2.0 + (d - 1) * (d - 1) * r / 4.0 + n * (m - (d - 1) * r / 2.0);
}

Complex q_to_real_power(int d, double e) {
    // Reduce modulo d first to keep the angle small.
    double t = std::fmod(e, (double)d);
    return std::polar(1.0, 2 * std::numbers::pi * t / d);
}

void check_real_params(int d, int a) {
    QdftParams{d, Rational(0), a}.validate();
}

}  // namespace

Rational fra_exponent(const QdftParams &p, int n, int m) {
    std::int64_t d = p.d;
    return Rational(n * (d - n) * p.a, 2) + Rational((d - 1) * (d - 1)) * p.r / Rational(4) +
           Rational(n) * (Rational(m) - Rational(d - 1) * p.r / Rational(2));
}

Rational hra_exponent(const QdftParams &p, int n, int alpha) {
    return fra_exponent(p, p.d - 1 - n, alpha);
}

Rational dra_exponent(const QdftParams &p, int m) {
    std::int64_t d = p.d;
    return Rational(m * (d - m) * p.a, 2) + Rational((d - 1) * (d - 1)) * p.r / Rational(4) -
           Rational(m * (d - 1)) * p.r / Rational(2);
}

PhaseMatrix fra_matrix(const QdftParams &p) {
    p.validate();
    PhaseMatrix out(p.d, Amplitude::kInvSqrtDim);
    for (int n = 0; n < p.d; n++) {
        for (int m = 0; m < p.d; m++) {
            out.set(n, m, ExactPhase::root_of_unity(p.d, fra_exponent(p, n, m)));
        }
    }
    return out;
}

PhaseMatrix hra_matrix(const QdftParams &p) {
    p.validate();
    PhaseMatrix out(p.d, Amplitude::kInvSqrtDim);
    for (int n = 0; n < p.d; n++) {
        for (int alpha = 0; alpha < p.d; alpha++) {
            out.set(n, alpha, ExactPhase::root_of_unity(p.d, hra_exponent(p, n, alpha)));
        }
    }
    return out;
}

PhaseMatrix dra_matrix(const QdftParams &p) {
    p.validate();
    PhaseMatrix out(p.d, Amplitude::kOne);
    for (int m = 0; m < p.d; m++) {
        out.set(m, m, ExactPhase::root_of_unity(p.d, dra_exponent(p, m)));
    }
    return out;
}

ComplexMatrix fra_matrix_real(int d, double r, int a) {
    check_real_params(d, a);
    ComplexMatrix out(d, d);
    double s = 1.0 / std::sqrt((double)d);
    for (int n = 0; n < d; n++) {
        for (int m = 0; m < d; m++) {
            out(n, m) = s * q_to_real_power(d, fra_exponent_real(d, r, a, n, m));
        }
    }
    return out;
}

ComplexMatrix hra_matrix_real(int d, double r, int a) {
    ComplexMatrix f = fra_matrix_real(d, r, a);
    return f.colwise().reverse();
}

ComplexMatrix dra_matrix_real(int d, double r, int a) {
    check_real_params(d, a);
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (int m = 0; m < d; m++) {
        double e = m * (d - m) * a / 2.0 + (d - 1) * (d - 1) * r / 4.0 - m * (d - 1) * r / 2.0;
        out(m, m) = q_to_real_power(d, e);
    }
    return out;
}

ComplexVector forward(const ComplexVector &x, const ComplexMatrix &f) {
    if (x.size() != f.rows()) {
        throw std::invalid_argument("forward: signal length does not match the transform");
    }
    return f.transpose() * x;
}

ComplexVector inverse(const ComplexVector &y, const ComplexMatrix &f) {
    if (y.size() != f.rows()) {
        throw std::invalid_argument("inverse: signal length does not match the transform");
    }
    return f.conjugate() * y;
}

ComplexVector forward(const ComplexVector &x, const QdftParams &p) {
    return forward(x, fra_matrix(p).to_complex());
}

ComplexVector inverse(const ComplexVector &y, const QdftParams &p) {
    return inverse(y, fra_matrix(p).to_complex());
}

ParsevalSums parseval_check(const ComplexVector &x, const ComplexVector &x2, const QdftParams &p) {
    if (x.size() != x2.size()) {
        throw std::invalid_argument("parseval_check: length mismatch");
    }
    ComplexMatrix f = fra_matrix(p).to_complex();
    ComplexVector y = forward(x, f);
    ComplexVector y2 = forward(x2, f);
    return {y.dot(y2), x.dot(x2)};
}

Complex gauss_sum(const GaussSumArgs &g) {
    if (g.w == 0) {
        throw std::invalid_argument("gauss_sum: w must be nonzero");
    }
    std::int64_t w_abs = g.w < 0 ? -g.w : g.w;
    double sign = g.w < 0 ? -1.0 : 1.0;
    std::int64_t period = 2 * w_abs;
    Complex s = 0;
    for (std::int64_t k = 0; k < w_abs; k++) {
        std::int64_t quad = ((g.u % period) * ((k * k) % period)) % period;
        double lin = std::fmod(g.v * (double)k, (double)period);
        double angle = sign * std::numbers::pi * ((double)quad + lin) / (double)w_abs;
        s += std::polar(1.0, angle);
    }
    return s;
}

Complex gauss_sum(std::int64_t u, Rational v, std::int64_t w) {
    if (w == 0) {
        throw std::invalid_argument("gauss_sum: w must be nonzero");
    }
    std::int64_t w_abs = w < 0 ? -w : w;
    PhaseSum s;
    for (std::int64_t k = 0; k < w_abs; k++) {
        Rational x = (Rational(u * k * k) + v * Rational(k)) / Rational(w);
        s.add(ExactPhase::half_turns(x));
    }
    return s.value();
}

Complex trace_fra(const QdftParams &p) {
    p.validate();
    std::int64_t d = p.d;
    ExactPhase prefactor = ExactPhase::half_turns(Rational((d - 1) * (d - 1)) * p.r / Rational(2 * d));
    Rational v = Rational(d) * (Rational(p.a) - p.r) + p.r;
    return prefactor.to_complex() * gauss_sum(2 - p.a, v, d) / std::sqrt((double)d);
}

Complex det_fra(int d, int a) {
    QdftParams{d, Rational(0), a}.validate();
    Complex det_f = determinant(fra_matrix(QdftParams{d, Rational(0), 0}).to_complex());
    ExactPhase pre = ExactPhase::half_turns(Rational((std::int64_t)(d * d - 1) * a, 6));
    return pre.to_complex() * det_f;
}

HadamardReport is_generalized_hadamard(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("is_generalized_hadamard: matrix must be square");
    }
    HadamardReport rep;
    rep.unitarity_residual = unitarity_residual(m);
    double target = 1.0 / std::sqrt((double)m.rows());
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            rep.modulus_residual = std::max(rep.modulus_residual, std::abs(std::abs(m(i, j)) - target));
        }
    }
    rep.unitary = rep.unitarity_residual <= tol;
    rep.flat = rep.modulus_residual <= tol;
    return rep;
}

HadamardReport is_generalized_hadamard(const PhaseMatrix &m, double tol) {
    return is_generalized_hadamard(m.to_complex(), tol);
}

}  // namespace qmub
