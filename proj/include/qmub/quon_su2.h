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

#ifndef QMUB_QUON_SU2_H
#define QMUB_QUON_SU2_H

#include <stdexcept>
#include <vector>

#include "qmub/half_integer.h"
#include "qmub/linalg.h"
#include "qmub/phase_matrix.h"
#include "qmub/rational.h"

namespace qmub {

/// [n]_q with q = exp(2 pi i / k). [0]_q is 1 by convention.
Complex q_number(int n, int k);
/// [1]_q [2]_q ... [n]_q, and 1 for n = 0.
Complex q_factorial(int n, int k);

/// Two commuting k-dimensional quon algebras, x and y.
struct QuonRep {
    int k = 0;
    ExactPhase q;
    ComplexMatrix x_plus, x_minus, n_x;
    ComplexMatrix y_plus, y_minus, n_y;
};
QuonRep quon_rep(int k);

/// Tensor layout (n1, n2) -> n1 * k + n2.
int tensor_index(int k, int n1, int n2);

/// diag sqrt(n1 (n2 + 1)) on the k^2-dimensional space.
Eigen::MatrixXd build_h(int k);

/// v_ra = s_x s_y assembled from the quon operators.
ComplexMatrix build_vra_quonic(int k, Rational r, int a);

/// v_ra written down directly from its action on |n1, n2).
ComplexMatrix vra_action_table(int k, Rational r, int a);

/// |j, m> in the computational labelling n = j - m.
struct AngularState {
    HalfInteger j;
    HalfInteger m;

    static AngularState from_index(HalfInteger j, int n);
    int index() const;
    /// Occupation numbers (n1, n2) = (j + m, j - m).
    int n1() const;
    int n2() const;
};

class SubspaceLeak : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Matrix of op on span{|j+m, j-m)}, rows and columns in computational order.
/// Throws SubspaceLeak if some column leaves the subspace by more than 1e-12.
ComplexMatrix restrict_to_j(const ComplexMatrix &op, HalfInteger j);

struct Su2Triple {
    ComplexMatrix j_plus;
    ComplexMatrix j_minus;
    ComplexMatrix j_z;
    Rational r{0};
    int a = 0;
};

/// j+ = h v, j- = v^dagger h, jz = (h^2 - v^dagger h^2 v) / 2, restricted to j.
Su2Triple su2_generators(HalfInteger j, Rational r, int a);
/// j+ j- + jz (jz - 1).
ComplexMatrix casimir(const Su2Triple &t);

/// Column alpha holds the common eigenvector |j alpha; r a> in computational order.
PhaseMatrix eigenbasis_exact(HalfInteger j, Rational r, int a);
std::vector<ComplexVector> eigenbasis(HalfInteger j, Rational r, int a);
/// q^{j(r + a) - alpha}.
ExactPhase eigenvalue(HalfInteger j, Rational r, int a, int alpha);

/// <j alpha; r a | j beta; s a> in closed form.
Complex overlap_same_a(HalfInteger j, Rational r, Rational s, int a, int alpha, int beta);

/// diag(q^{p n}) in computational order, i.e. q^{p (j - m)}.
PhaseMatrix rotation_operator(HalfInteger j, int p);

}  // namespace qmub

#endif
