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

#include "qmub/half_integer.h"

#include <stdexcept>
#include <string>

namespace qmub {

HalfInteger HalfInteger::parse(std::string_view text) {
    std::string s(text);
    auto fail = [&]() -> HalfInteger {
        throw std::invalid_argument("not an integer or half-integer: '" + s + "'");
    };
    if (is_rational_literal(text)) {
        Rational r = parse_rational(text);
        Rational t = r * Rational(2);
        if (t.denominator() != 1) {
            return fail();
        }
        return from_twice((int)t.numerator());
    }
    // Decimal forms such as 1.5 or -0.5.
    size_t used = 0;
    double v;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        return fail();
    }
    if (used != s.size()) {
        return fail();
    }
    double t = 2 * v;
    if (t != (double)(long long)t) {
        return fail();
    }
    return from_twice((int)t);
}

std::string HalfInteger::str() const {
    if (is_integer()) {
        return std::to_string(twice_ / 2);
    }
    return std::to_string(twice_) + "/2";
}

}  // namespace qmub
