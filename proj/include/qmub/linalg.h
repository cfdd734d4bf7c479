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

#ifndef QMUB_LINALG_H
#define QMUB_LINALG_H

#include <Eigen/Dense>
#include <complex>

namespace qmub {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest entrywise modulus of m^dagger m - I.
double unitarity_residual(const ComplexMatrix &m);

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector kron(const ComplexVector &a, const ComplexVector &b);
Complex determinant(const ComplexMatrix &m);

/// Largest deviation of |<u|v>| from 1/sqrt(d) over all pairs of columns.
double unbiasedness_deviation(const ComplexMatrix &u, const ComplexMatrix &v);

}  // namespace qmub

#endif
