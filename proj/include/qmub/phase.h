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

#ifndef QMUB_PHASE_H
#define QMUB_PHASE_H

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qmub/rational.h"

namespace qmub {

/// A root of unity exp(2 pi i t), stored as the reduced rational t in [0, 1).
class ExactPhase {
   public:
    ExactPhase() = default;
    explicit ExactPhase(Rational turns);

    static ExactPhase from_fraction(std::int64_t num, std::int64_t den);
    /// q^e where q = exp(2 pi i / d). The exponent may be fractional.
    static ExactPhase root_of_unity(int d, Rational exponent);
    /// exp(i pi x).
    static ExactPhase half_turns(Rational x);

    Rational turns() const {
        return turns_;
    }

    ExactPhase operator*(const ExactPhase &other) const;
    ExactPhase &operator*=(const ExactPhase &other);
    ExactPhase pow(std::int64_t k) const;
    ExactPhase conj() const;
    std::complex<double> to_complex() const;

    bool operator==(const ExactPhase &other) const = default;
    bool operator<(const ExactPhase &other) const {
        return turns_ < other.turns_;
    }

    std::string str() const;

   private:
    Rational turns_{0};
};

ExactPhase phase_from_fraction(std::int64_t num, std::int64_t den);
ExactPhase phase_mul(const ExactPhase &a, const ExactPhase &b);
ExactPhase phase_pow(const ExactPhase &a, std::int64_t k);
std::complex<double> to_complex(const ExactPhase &a);

/// A formal sum of phases with multiplicities.
///
/// Zero is decided exactly when the multiset is invariant under rotation by
/// 1/p for a prime p. Sums that vanish for subtler reasons report
/// is_exact_zero() == false and must be judged numerically.
class PhaseSum {
   public:
    void add(const ExactPhase &p, std::int64_t count = 1);
    bool empty() const {
        return counts_.empty();
    }
    bool is_exact_zero() const;
    /// Set when every term is +1 or -1.
    std::optional<std::int64_t> exact_integer() const;
    std::complex<double> value() const;

   private:
    std::map<Rational, std::int64_t> counts_;
};

}  // namespace qmub

#endif
