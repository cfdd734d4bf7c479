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

#ifndef QMUB_QDFT_H
#define QMUB_QDFT_H

#include <cstdint>

#include "qmub/linalg.h"
#include "qmub/phase_matrix.h"
#include "qmub/rational.h"

namespace qmub {

struct QdftParams {
    int d = 2;
    Rational r{0};
    int a = 0;

    /// Throws std::invalid_argument unless d >= 2 and 0 <= a < d.
    void validate() const;
};

/// Exponent of q = exp(2 pi i / d) in entry (n, m) of F_ra.
Rational fra_exponent(const QdftParams &p, int n, int m);
/// Exponent of q in entry (n, alpha) of H_ra.
Rational hra_exponent(const QdftParams &p, int n, int alpha);
/// Exponent of q in diagonal entry m of D_ra.
Rational dra_exponent(const QdftParams &p, int m);

PhaseMatrix fra_matrix(const QdftParams &p);
PhaseMatrix hra_matrix(const QdftParams &p);
PhaseMatrix dra_matrix(const QdftParams &p);

/// Float path for real r.
ComplexMatrix fra_matrix_real(int d, double r, int a);
ComplexMatrix hra_matrix_real(int d, double r, int a);
ComplexMatrix dra_matrix_real(int d, double r, int a);

/// y_n = sum_m F(m, n) x_m.
ComplexVector forward(const ComplexVector &x, const ComplexMatrix &f);
/// x_m = sum_n conj(F(m, n)) y_n.
ComplexVector inverse(const ComplexVector &y, const ComplexMatrix &f);
ComplexVector forward(const ComplexVector &x, const QdftParams &p);
ComplexVector inverse(const ComplexVector &y, const QdftParams &p);

struct ParsevalSums {
    Complex transformed;  // sum conj(y_n) y'_n
    Complex original;     // sum conj(x_m) x'_m
};
ParsevalSums parseval_check(const ComplexVector &x, const ComplexVector &x2, const QdftParams &p);

struct GaussSumArgs {
    std::int64_t u = 0;
    double v = 0;
    std::int64_t w = 1;
};

/// Direct summation of exp(i pi (u k^2 + v k) / w) over k = 0..|w|-1.
Complex gauss_sum(const GaussSumArgs &g);
/// Same sum with rational v; every term is an exact phase before conversion.
Complex gauss_sum(std::int64_t u, Rational v, std::int64_t w);

/// Closed-form trace through a Gauss sum.
Complex trace_fra(const QdftParams &p);

/// exp(i pi (d^2 - 1) a / 6) det(F_00), with det(F_00) from an LU factorization.
Complex det_fra(int d, int a);

struct HadamardReport {
    double unitarity_residual = 0;
    double modulus_residual = 0;
    bool unitary = false;
    bool flat = false;
    bool is_hadamard() const {
        return unitary && flat;
    }
};

HadamardReport is_generalized_hadamard(const ComplexMatrix &m, double tol = 1e-10);
HadamardReport is_generalized_hadamard(const PhaseMatrix &m, double tol = 1e-10);

}  // namespace qmub

#endif
