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

#ifndef QMUB_MUB_H
#define QMUB_MUB_H

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qmub/linalg.h"
#include "qmub/phase_matrix.h"
#include "qmub/qdft.h"
#include "qmub/rational.h"
#include "qmub/weyl_pauli.h"

namespace qmub {

struct ComputationalLabel {
    bool operator==(const ComputationalLabel &) const = default;
};
struct RaLabel {
    Rational r{0};
    int a = 0;
    bool operator==(const RaLabel &) const = default;
};
struct WLabel {
    int a = 0;
    int b = 0;
    bool operator==(const WLabel &) const = default;
};
using BasisLabel = std::variant<ComputationalLabel, RaLabel, WLabel>;

std::string label_string(const BasisLabel &label);

struct Basis {
    int dim = 0;
    /// Columns are the basis vectors.
    ComplexMatrix vectors;
    /// Present when every vector is amplitude times exact phases.
    std::optional<PhaseMatrix> exact;
    BasisLabel label;
};

struct MubSet {
    int dim = 0;
    std::vector<Basis> bases;
    bool declared_complete = false;
};

bool is_prime(int n);

Basis computational_basis(int d);
/// Columns of H_ra.
Basis ra_basis(int d, Rational r, int a);

/// B_r0, ..., B_r(p-1), then the computational basis.
MubSet mub_prime(int p, Rational r);

/// B_0a, B_0(a+1), B_d for any d >= 2; not declared complete.
MubSet three_mub(int d, int a);

/// Largest | |<u|v>| - 1/sqrt(d) | over all vector pairs.
double unbiasedness(const Basis &b1, const Basis &b2);

/// Largest unbiasedness deviation over all basis pairs of the set.
double max_pairwise_deviation(const MubSet &set);

/// S(u, v, w) / p with u = a - b, v = -(a - b) p - 2 (alpha - beta), w = p.
/// The result does not depend on r.
Complex gauss_inner_product(int p, Rational r, int a, int alpha, int b, int beta);

struct ProductHadamard {
    ComplexMatrix product;
    HadamardReport report;
};
/// F_ra^dagger F_rb with its Hadamard verdict.
ProductHadamard product_hadamard(int d, Rational r, int a, int b);

/// Computational basis followed by W_00, W_11, W_01, W_10.
MubSet mub_dim4();

/// |det A| with A(k, l) = state(k d + l).
double entanglement_det(const ComplexVector &state, int d);

struct CommutingClass {
    int label = 0;
    std::vector<PauliIndex> members;
};
std::vector<CommutingClass> commuting_classes(int p);

struct PartitionReport {
    bool partition_ok = false;
    bool abelian_ok = false;
    bool independent_ok = false;
    bool ok() const {
        return partition_ok && abelian_ok && independent_ok;
    }
};
PartitionReport sl_partition_check(int p);

/// Largest entrywise distance between matching columns once each column of v
/// is rotated by the global phase that aligns it with u at u's largest entry.
double phase_insensitive_distance(const ComplexMatrix &u, const ComplexMatrix &v);

}  // namespace qmub

#endif
