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

#ifndef QMUB_PHASE_MATRIX_H
#define QMUB_PHASE_MATRIX_H

#include <optional>
#include <variant>
#include <vector>

#include "qmub/linalg.h"
#include "qmub/phase.h"

namespace qmub {

/// Common scale factor shared by every nonzero entry.
enum class Amplitude { kOne, kInvSqrtDim };

/// Square matrix whose entries are each zero or (amplitude * phase).
class PhaseMatrix {
   public:
    using Entry = std::optional<ExactPhase>;

    PhaseMatrix() = default;
    /// All-zero matrix.
    PhaseMatrix(int dim, Amplitude amplitude);
    static PhaseMatrix identity(int dim);
    /// Diagonal matrix with the given phases.
    static PhaseMatrix diagonal(const std::vector<ExactPhase> &phases);

    int dim() const {
        return dim_;
    }
    Amplitude amplitude() const {
        return amplitude_;
    }
    double amplitude_value() const;

    const Entry &at(int row, int col) const {
        return entries_[row * dim_ + col];
    }
    void set(int row, int col, Entry value) {
        entries_[row * dim_ + col] = value;
    }

    /// At most one nonzero entry in every row and every column.
    bool is_monomial() const;

    ComplexMatrix to_complex() const;
    PhaseMatrix adjoint() const;
    PhaseMatrix transpose() const;
    PhaseMatrix scaled(const ExactPhase &s) const;
    ComplexVector column(int col) const;

    /// Sum of the diagonal as a formal phase sum (amplitude not applied).
    PhaseSum trace_phases() const;

    bool operator==(const PhaseMatrix &other) const = default;

   private:
    int dim_ = 0;
    Amplitude amplitude_ = Amplitude::kOne;
    std::vector<Entry> entries_;
};

using MatrixProduct = std::variant<PhaseMatrix, ComplexMatrix>;

/// Exact when every output entry gets at most one nonzero term and the
/// amplitude stays representable; otherwise a ComplexMatrix.
MatrixProduct multiply(const PhaseMatrix &a, const PhaseMatrix &b);

/// Like multiply but throws std::domain_error if the product is not exact.
PhaseMatrix exact_multiply(const PhaseMatrix &a, const PhaseMatrix &b);

/// m^k for a monomial matrix with unit amplitude. Negative k uses the adjoint.
PhaseMatrix exact_pow(const PhaseMatrix &m, std::int64_t k);

ComplexMatrix to_complex(const MatrixProduct &p);

/// Recognises each entry of m as amplitude * exp(2 pi i n / denominator)
/// within tol, or zero. Returns nullopt if any entry fails to snap.
std::optional<PhaseMatrix> snap_to_phases(
    const ComplexMatrix &m, Amplitude amplitude, int denominator, double tol);

}  // namespace qmub

#endif
