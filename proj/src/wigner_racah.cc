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

#include "qmub/wigner_racah.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "qmub/phase.h"

namespace qmub {

namespace {

constexpr int kMaxFactorial = 256;

const std::array<double, kMaxFactorial + 1> &log_factorials() {
    static const std::array<double, kMaxFactorial + 1> table = [] {
        std::array<double, kMaxFactorial + 1> t{};
        for (int n = 1; n <= kMaxFactorial; n++) {
            t[n] = t[n - 1] + std::log((double)n);
        }
        return t;
    }();
    return table;
}

double log_fact(int n) {
    if (n < 0 || n > kMaxFactorial) {
        throw std::out_of_range("factorial argument out of range");
    }
    return log_factorials()[n];
}

void check_j(HalfInteger j) {
    if (j.twice() < 0) {
        throw std::invalid_argument("angular momentum must be non-negative, got " + j.str());
    }
}

void check_m(HalfInteger j, HalfInteger m) {
    if ((j.twice() - m.twice()) % 2 != 0) {
        throw std::invalid_argument("m = " + m.str() + " has the wrong integrality for j = " + j.str());
    }
    if (m.twice() < -j.twice() || m.twice() > j.twice()) {
        throw std::invalid_argument("m = " + m.str() + " lies outside [-j, j] for j = " + j.str());
    }
}

void check_alpha(HalfInteger j, int alpha) {
    if (alpha < 0 || alpha > j.twice()) {
        throw std::invalid_argument("alpha must lie in [0, 2j]");
    }
}

// Half-integer sums that must be integers; arguments are doubled values.
int half(int twice) {
    return twice / 2;
}

}  // namespace

bool triangle(HalfInteger j1, HalfInteger j2, HalfInteger j3) {
    int a = j1.twice(), b = j2.twice(), c = j3.twice();
    return c >= std::abs(a - b) && c <= a + b && (a + b + c) % 2 == 0;
}

double wigner_3jm(const JTriple &t, HalfInteger m1, HalfInteger m2, HalfInteger m3) {
    check_j(t.j1);
    check_j(t.j2);
    check_j(t.j3);
    check_m(t.j1, m1);
    check_m(t.j2, m2);
    check_m(t.j3, m3);
    if (m1.twice() + m2.twice() + m3.twice() != 0 || !triangle(t.j1, t.j2, t.j3)) {
        return 0;
    }
    int j1 = t.j1.twice(), j2 = t.j2.twice(), j3 = t.j3.twice();
    int a1 = m1.twice(), a2 = m2.twice(), a3 = m3.twice();

    double log_delta = log_fact(half(j1 + j2 - j3)) + log_fact(half(j1 - j2 + j3)) + log_fact(half(-j1 + j2 + j3)) -
                       log_fact(half(j1 + j2 + j3) + 1);
    double log_ms = log_fact(half(j1 + a1)) + log_fact(half(j1 - a1)) + log_fact(half(j2 + a2)) +
                    log_fact(half(j2 - a2)) + log_fact(half(j3 + a3)) + log_fact(half(j3 - a3));
    double pre = 0.5 * (log_delta + log_ms);

    int k_min = std::max({0, half(j2 - j3 - a1), half(j1 - j3 + a2)});
    int k_max = std::min({half(j1 + j2 - j3), half(j1 - a1), half(j2 + a2)});
    double sum = 0;
    for (int k = k_min; k <= k_max; k++) {
        double log_den = log_fact(k) + log_fact(half(j3 - j2 + a1) + k) + log_fact(half(j3 - j1 - a2) + k) +
                         log_fact(half(j1 + j2 - j3) - k) + log_fact(half(j1 - a1) - k) + log_fact(half(j2 + a2) - k);
        double term = std::exp(pre - log_den);
        sum += (k % 2 == 0) ? term : -term;
    }
    int sign_exp = half(j1 - j2 - a3);
    return (sign_exp % 2 == 0) ? sum : -sum;
}

double clebsch_gordan(
    HalfInteger j1, HalfInteger m1, HalfInteger j2, HalfInteger m2, HalfInteger j3, HalfInteger m3) {
    double w = wigner_3jm({j1, j2, j3}, m1, m2, -m3);
    int sign_exp = half(j1.twice() - j2.twice() + m3.twice());
    double s = (sign_exp % 2 == 0) ? 1.0 : -1.0;
    return s * std::sqrt((double)(j3.twice() + 1)) * w;
}

Complex basis_change_coeff(HalfInteger j, HalfInteger m, int alpha) {
    check_j(j);
    check_m(j, m);
    check_alpha(j, alpha);
    int k = j.twice() + 1;
    std::int64_t j_plus_m = half(j.twice() + m.twice());
    return ExactPhase::root_of_unity(k, Rational(j_plus_m * alpha)).to_complex() / std::sqrt((double)k);
}

Complex cg_alpha(HalfInteger j1, HalfInteger j2, int alpha1, int alpha2, HalfInteger j3, int alpha3) {
    check_j(j1);
    check_j(j2);
    check_j(j3);
    check_alpha(j1, alpha1);
    check_alpha(j2, alpha2);
    check_alpha(j3, alpha3);
    if (!triangle(j1, j2, j3)) {
        return 0;
    }
    Complex sum = 0;
    for (int t1 = -j1.twice(); t1 <= j1.twice(); t1 += 2) {
        for (int t2 = -j2.twice(); t2 <= j2.twice(); t2 += 2) {
            int t3 = t1 + t2;
            if (t3 < -j3.twice() || t3 > j3.twice()) {
                continue;
            }
            auto m1 = HalfInteger::from_twice(t1), m2 = HalfInteger::from_twice(t2), m3 = HalfInteger::from_twice(t3);
            double cg = clebsch_gordan(j1, m1, j2, m2, j3, m3);
            if (cg == 0) {
                continue;
            }
            Complex w = std::conj(basis_change_coeff(j1, m1, alpha1)) * std::conj(basis_change_coeff(j2, m2, alpha2)) *
                        basis_change_coeff(j3, m3, alpha3);
            sum += cg * w;
        }
    }
    return sum;
}

Complex fbar(const JTriple &t, int alpha1, int alpha2, int alpha3) {
    check_j(t.j1);
    check_j(t.j2);
    check_j(t.j3);
    check_alpha(t.j1, alpha1);
    check_alpha(t.j2, alpha2);
    check_alpha(t.j3, alpha3);
    if (!triangle(t.j1, t.j2, t.j3)) {
        return 0;
    }
    Complex sum = 0;
    for (int t1 = -t.j1.twice(); t1 <= t.j1.twice(); t1 += 2) {
        for (int t2 = -t.j2.twice(); t2 <= t.j2.twice(); t2 += 2) {
            int t3 = -t1 - t2;
            if (t3 < -t.j3.twice() || t3 > t.j3.twice()) {
                continue;
            }
            auto m1 = HalfInteger::from_twice(t1), m2 = HalfInteger::from_twice(t2), m3 = HalfInteger::from_twice(t3);
            double w3 = wigner_3jm(t, m1, m2, m3);
            if (w3 == 0) {
                continue;
            }
            sum += w3 * std::conj(basis_change_coeff(t.j1, m1, alpha1)) *
                   std::conj(basis_change_coeff(t.j2, m2, alpha2)) * std::conj(basis_change_coeff(t.j3, m3, alpha3));
        }
    }
    return sum;
}

}  // namespace qmub
