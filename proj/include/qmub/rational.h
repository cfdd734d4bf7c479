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

#ifndef QMUB_RATIONAL_H
#define QMUB_RATIONAL_H

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace qmub {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q" or a bare integer. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// True if text looks like a rational literal accepted by parse_rational.
bool is_rational_literal(std::string_view text);

std::int64_t floor_div(std::int64_t num, std::int64_t den);
std::int64_t floor(Rational x);

/// x - floor(x), in [0, 1).
Rational frac(Rational x);

double to_double(Rational x);
std::string to_string(Rational x);

}  // namespace qmub

#endif
