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

#ifndef QMUB_WIGNER_RACAH_H
#define QMUB_WIGNER_RACAH_H

#include "qmub/half_integer.h"
#include "qmub/linalg.h"

namespace qmub {

struct JTriple {
    HalfInteger j1, j2, j3;
};

bool triangle(HalfInteger j1, HalfInteger j2, HalfInteger j3);

/// Ordinary 3-jm symbol by the Racah sum. Throws std::invalid_argument when a
/// j is negative or an m has the wrong integrality or lies outside [-j, j].
double wigner_3jm(const JTriple &t, HalfInteger m1, HalfInteger m2, HalfInteger m3);

/// <j1 m1 j2 m2 | j3 m3> in the Condon-Shortley convention.
double clebsch_gordan(HalfInteger j1, HalfInteger m1, HalfInteger j2, HalfInteger m2, HalfInteger j3, HalfInteger m3);

/// Coupling coefficient (j1 j2 alpha1 alpha2 | j3 alpha3) in the alpha labelling.
Complex cg_alpha(HalfInteger j1, HalfInteger j2, int alpha1, int alpha2, HalfInteger j3, int alpha3);

/// The f-bar symbol: the 3-jm symbol transformed by conjugate phases on all columns.
Complex fbar(const JTriple &t, int alpha1, int alpha2, int alpha3);

/// <j, m | j alpha; 0 0> = q^{(j + m) alpha} / sqrt(2j + 1), q = exp(2 pi i / (2j + 1)).
Complex basis_change_coeff(HalfInteger j, HalfInteger m, int alpha);

}  // namespace qmub

#endif
