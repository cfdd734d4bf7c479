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

#ifndef QMUB_HALF_INTEGER_H
#define QMUB_HALF_INTEGER_H

#include <compare>
#include <string>
#include <string_view>

#include "qmub/rational.h"

namespace qmub {

/// Integer or half-integer, stored doubled.
class HalfInteger {
   public:
    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_twice(int twice) {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInteger from_int(int v) {
        return from_twice(2 * v);
    }
    /// Accepts "3/2", "-1/2", "2", "1.5", "-0.5".
    static HalfInteger parse(std::string_view text);

    constexpr int twice() const {
        return twice_;
    }
    constexpr bool is_integer() const {
        return twice_ % 2 == 0;
    }
    double to_double() const {
        return twice_ / 2.0;
    }
    Rational to_rational() const {
        return Rational(twice_, 2);
    }
    std::string str() const;

    constexpr HalfInteger operator+(HalfInteger o) const {
        return from_twice(twice_ + o.twice_);
    }
    constexpr HalfInteger operator-(HalfInteger o) const {
        return from_twice(twice_ - o.twice_);
    }
    constexpr HalfInteger operator-() const {
        return from_twice(-twice_);
    }
    constexpr auto operator<=>(const HalfInteger &) const = default;

   private:
    int twice_ = 0;
};

}  // namespace qmub

#endif
