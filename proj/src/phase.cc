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

#include "qmub/phase.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qmub {

namespace {

bool parse_int(std::string_view s, std::int64_t *out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

bool is_rational_literal(std::string_view text) {
    std::int64_t n, d;
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return parse_int(text, &n);
    }
    return parse_int(text.substr(0, slash), &n) && parse_int(text.substr(slash + 1), &d) && d != 0;
}

Rational parse_rational(std::string_view text) {
    std::int64_t n = 0, d = 1;
    auto slash = text.find('/');
    bool ok;
    if (slash == std::string_view::npos) {
        ok = parse_int(text, &n);
    } else {
        ok = parse_int(text.substr(0, slash), &n) && parse_int(text.substr(slash + 1), &d) && d != 0;
    }
    if (!ok) {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }
    return Rational(n, d);
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t q = num / den;
    if (num % den != 0 && num < 0) {
        q -= 1;
    }
    return q;
}

std::int64_t floor(Rational x) {
    return floor_div(x.numerator(), x.denominator());
}

Rational frac(Rational x) {
    return x - Rational(floor(x));
}

double to_double(Rational x) {
    return (double)x.numerator() / (double)x.denominator();
}

std::string to_string(Rational x) {
    if (x.denominator() == 1) {
        return std::to_string(x.numerator());
    }
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

ExactPhase::ExactPhase(Rational turns) : turns_(frac(turns)) {
}

ExactPhase ExactPhase::from_fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("phase denominator is zero");
    }
    return ExactPhase(Rational(num, den));
}

ExactPhase ExactPhase::root_of_unity(int d, Rational exponent) {
    if (d <= 0) {
        throw std::invalid_argument("root of unity order must be positive");
    }
    return ExactPhase(exponent / Rational(d));
}

ExactPhase ExactPhase::half_turns(Rational x) {
    return ExactPhase(x / Rational(2));
}

ExactPhase ExactPhase::operator*(const ExactPhase &other) const {
    return ExactPhase(turns_ + other.turns_);
}

ExactPhase &ExactPhase::operator*=(const ExactPhase &other) {
    turns_ = frac(turns_ + other.turns_);
    return *this;
}

ExactPhase ExactPhase::pow(std::int64_t k) const {
    // Reduce k modulo the order to keep intermediates small.
    std::int64_t den = turns_.denominator();
    std::int64_t kk = k % den;
    return ExactPhase(turns_ * Rational(kk));
}

ExactPhase ExactPhase::conj() const {
    return ExactPhase(-turns_);
}

std::complex<double> ExactPhase::to_complex() const {
    std::int64_t n = turns_.numerator();
    std::int64_t d = turns_.denominator();
    if ((4 * n) % d == 0) {
        switch ((4 * n) / d) {
            case 0:
                return {1, 0};
            case 1:
                return {0, 1};
            case 2:
                return {-1, 0};
            default:
                return {0, -1};
        }
    }
    // Angle in (-pi, pi] for accuracy.
    double t = (double)n / (double)d;
    if (2 * n > d) {
        t = (double)(n - d) / (double)d;
    }
    double theta = 2 * std::numbers::pi * t;
    return {std::cos(theta), std::sin(theta)};
}

std::string ExactPhase::str() const {
    return "exp(2*pi*i*" + to_string(turns_) + ")";
}

ExactPhase phase_from_fraction(std::int64_t num, std::int64_t den) {
    return ExactPhase::from_fraction(num, den);
}

ExactPhase phase_mul(const ExactPhase &a, const ExactPhase &b) {
    return a * b;
}

ExactPhase phase_pow(const ExactPhase &a, std::int64_t k) {
    return a.pow(k);
}

std::complex<double> to_complex(const ExactPhase &a) {
    return a.to_complex();
}

void PhaseSum::add(const ExactPhase &p, std::int64_t count) {
    if (count == 0) {
        return;
    }
    auto &c = counts_[p.turns()];
    c += count;
    if (c == 0) {
        counts_.erase(p.turns());
    }
}

bool PhaseSum::is_exact_zero() const {
    if (counts_.empty()) {
        return true;
    }
    std::int64_t lcm = 1;
    for (const auto &[t, c] : counts_) {
        lcm = std::lcm(lcm, t.denominator());
    }
    std::vector<std::int64_t> primes;
    std::int64_t m = lcm;
    for (std::int64_t f = 2; f * f <= m; f++) {
        if (m % f == 0) {
            primes.push_back(f);
            while (m % f == 0) {
                m /= f;
            }
        }
    }
    if (m > 1) {
        primes.push_back(m);
    }
    for (auto p : primes) {
        bool invariant = true;
        for (const auto &[t, c] : counts_) {
            auto it = counts_.find(frac(t + Rational(1, p)));
            if (it == counts_.end() || it->second != c) {
                invariant = false;
                break;
            }
        }
        if (invariant) {
            return true;
        }
    }
    return false;
}

std::optional<std::int64_t> PhaseSum::exact_integer() const {
    std::int64_t total = 0;
    for (const auto &[t, c] : counts_) {
        if (t == Rational(0)) {
            total += c;
        } else if (t == Rational(1, 2)) {
            total -= c;
        } else {
            return std::nullopt;
        }
    }
    return total;
}

std::complex<double> PhaseSum::value() const {
    std::complex<double> s = 0;
    for (const auto &[t, c] : counts_) {
        s += (double)c * ExactPhase(t).to_complex();
    }
    return s;
}

}  // namespace qmub
