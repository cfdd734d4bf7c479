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

#ifndef QMUB_WEYL_PAULI_H
#define QMUB_WEYL_PAULI_H

#include <vector>

#include "qmub/linalg.h"
#include "qmub/phase_matrix.h"
#include "qmub/rational.h"

namespace qmub {

/// u_ab = X^a Z^b.
struct PauliIndex {
    int a = 0;
    int b = 0;
    bool operator==(const PauliIndex &) const = default;
};

/// w_abc = q^a X^b Z^c.
struct PauliGroupElement {
    int a = 0;
    int b = 0;
    int c = 0;
    bool operator==(const PauliGroupElement &) const = default;
};

/// Unreduced index pair of T_(n1, n2).
struct SineIndex {
    int n1 = 0;
    int n2 = 0;
};

int mod(int x, int d);

PhaseMatrix x_matrix(int d);
PhaseMatrix z_matrix(int d);
PhaseMatrix pr_matrix(int d, Rational r);
/// The explicit band form: V(n-1, n) = q^{na}, V(d-1, 0) = exp(i pi (d-1) r).
PhaseMatrix vra_matrix(int d, Rational r, int a);

/// H_ra^dagger V_ra H_ra.
ComplexMatrix diagonalize_vra(int d, Rational r, int a);

PhaseMatrix u_ab(int d, PauliIndex idx);

/// X^m Z^n == q^{mn} Z^n X^m and X^d == Z^d == I exactly, and F^dagger X F == Z
/// within 1e-10.
bool weyl_relation_check(int d, int m, int n);

/// Largest |tr(u_ab^dagger u_a'b') - d delta delta| over all pairs. Every trace
/// is decided exactly, so the result is 0 or an exact integer mismatch.
double pauli_trace_orthogonality(int d);

struct CommutatorCheck {
    /// u u' == q^{-ba'} u'' and u' u == q^{-ab'} u'' exactly.
    bool products_ok = false;
    bool commutes = false;
    bool anticommutes = false;
    /// commutes iff ab' - ba' = 0 (mod d).
    bool commutator_rule_ok = false;
    /// anticommutes iff ab' - ba' = d/2 (mod d).
    bool anticommutator_rule_ok = false;
    bool ok() const {
        return products_ok && commutator_rule_ok && anticommutator_rule_ok;
    }
};
CommutatorCheck uab_commutators(int d, PauliIndex u, PauliIndex v);

PauliGroupElement pauli_reduce(int d, PauliGroupElement g);
PauliGroupElement pauli_compose(int d, PauliGroupElement g, PauliGroupElement h);
PauliGroupElement pauli_inverse(int d, PauliGroupElement g);
PauliGroupElement pauli_group_commutator(int d, PauliGroupElement g, PauliGroupElement h);
PhaseMatrix to_matrix(int d, PauliGroupElement g);
/// Elements commuting with every group element, by brute force.
std::vector<PauliGroupElement> pauli_center(int d);

PhaseMatrix t_matrix(int d, SineIndex s);
/// T_m T_n == q^{-(m x n)/2} T_{m+n} exactly, and the commutator matches
/// -2i sin(pi (m x n) / d) T_{m+n} within 1e-12.
bool sine_commutator_check(int d, SineIndex m, SineIndex n);

/// Spectrum of X is the d distinct d-th roots of unity.
bool regular_representation_check(int d);

}  // namespace qmub

#endif
