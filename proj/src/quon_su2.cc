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

#include "qmub/quon_su2.h"

#include <cmath>
#include <numbers>
#include <string>

namespace qmub {

namespace {

void check_k(int k) {
    if (k < 2) {
        throw std::invalid_argument("quon dimension k must be at least 2");
    }
}

int dim_of(HalfInteger j) {
    if (j.twice() < 1) {
        throw std::invalid_argument("j must be at least 1/2");
    }
    return j.twice() + 1;
}

void check_a(int a, int k) {
    if (a < 0 || a >= k) {
        throw std::invalid_argument("a must lie in [0, 2j]");
    }
}

ComplexMatrix diag_phases(const std::vector<ExactPhase> &ph) {
    ComplexMatrix m = ComplexMatrix::Zero((Eigen::Index)ph.size(), (Eigen::Index)ph.size());
    for (size_t i = 0; i < ph.size(); i++) {
        m((Eigen::Index)i, (Eigen::Index)i) = ph[i].to_complex();
    }
    return m;
}

}  // namespace

Complex q_number(int n, int k) {
    check_k(k);
    if (n == 0) {
        return 1;
    }
    Complex s = 0;
    for (int i = 0; i < n; i++) {
        s += ExactPhase::from_fraction(i, k).to_complex();
    }
    return s;
}

Complex q_factorial(int n, int k) {
    Complex p = 1;
    for (int i = 1; i <= n; i++) {
        p *= q_number(i, k);
    }
    return p;
}

QuonRep quon_rep(int k) {
    check_k(k);
    QuonRep rep;
    rep.k = k;
    rep.q = ExactPhase::from_fraction(1, k);
    rep.x_plus = rep.x_minus = rep.y_plus = rep.y_minus = rep.n_x = ComplexMatrix::Zero(k, k);
    for (int n = 0; n + 1 < k; n++) {
        rep.x_plus(n + 1, n) = 1;
        rep.y_plus(n + 1, n) = q_number(n + 1, k);
    }
    for (int n = 1; n < k; n++) {
        rep.x_minus(n - 1, n) = q_number(n, k);
        rep.y_minus(n - 1, n) = 1;
    }
    for (int n = 0; n < k; n++) {
        rep.n_x(n, n) = n;
    }
    rep.n_y = rep.n_x;
    return rep;
}

int tensor_index(int k, int n1, int n2) {
    return n1 * k + n2;
}

Eigen::MatrixXd build_h(int k) {
    check_k(k);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(k * k, k * k);
    for (int n1 = 0; n1 < k; n1++) {
        for (int n2 = 0; n2 < k; n2++) {
            int t = tensor_index(k, n1, n2);
            h(t, t) = std::sqrt((double)(n1 * (n2 + 1)));
        }
    }
    return h;
}

ComplexMatrix build_vra_quonic(int k, Rational r, int a) {
    check_k(k);
    check_a(a, k);
    QuonRep rep = quon_rep(k);
    ComplexMatrix id = ComplexMatrix::Identity(k, k);
    std::vector<ExactPhase> plus, minus;
    for (int n1 = 0; n1 < k; n1++) {
        for (int n2 = 0; n2 < k; n2++) {
            plus.push_back(ExactPhase::root_of_unity(k, Rational((std::int64_t)a * (n1 + n2), 2)));
            minus.push_back(ExactPhase::root_of_unity(k, Rational(-(std::int64_t)a * (n1 - n2), 2)));
        }
    }
    ExactPhase half_phi = ExactPhase::half_turns(Rational(k - 1) * r / Rational(2));
    Complex c = half_phi.to_complex() / q_factorial(k - 1, k);
    ComplexMatrix xm = ComplexMatrix::Identity(k, k);
    ComplexMatrix yp = ComplexMatrix::Identity(k, k);
    for (int i = 0; i < k - 1; i++) {
        xm = xm * rep.x_minus;
        yp = yp * rep.y_plus;
    }
    ComplexMatrix s_x = diag_phases(plus) * kron(rep.x_plus, id) + c * kron(xm, id);
    ComplexMatrix s_y = kron(id, rep.y_minus) * diag_phases(minus) + c * kron(id, yp);
    return s_x * s_y;
}

ComplexMatrix vra_action_table(int k, Rational r, int a) {
    check_k(k);
    check_a(a, k);
    Complex half_phi = ExactPhase::half_turns(Rational(k - 1) * r / Rational(2)).to_complex();
    Complex phi = ExactPhase::half_turns(Rational(k - 1) * r).to_complex();
    ComplexMatrix v = ComplexMatrix::Zero(k * k, k * k);
    for (int n1 = 0; n1 < k; n1++) {
        for (int n2 = 0; n2 < k; n2++) {
            int col = tensor_index(k, n1, n2);
            if (n1 == k - 1 && n2 == 0) {
                v(tensor_index(k, 0, k - 1), col) = phi;
            } else if (n1 == k - 1) {
                v(tensor_index(k, 0, n2 - 1), col) = half_phi;
            } else if (n2 == 0) {
                v(tensor_index(k, n1 + 1, k - 1), col) = half_phi;
            } else {
                v(tensor_index(k, n1 + 1, n2 - 1), col) =
                    ExactPhase::root_of_unity(k, Rational((std::int64_t)n2 * a)).to_complex();
            }
        }
    }
    return v;
}

AngularState AngularState::from_index(HalfInteger j, int n) {
    if (n < 0 || n > j.twice()) {
        throw std::invalid_argument("index out of range for j = " + j.str());
    }
    return {j, j - HalfInteger::from_int(n)};
}

int AngularState::index() const {
    return (j - m).twice() / 2;
}

int AngularState::n1() const {
    return (j + m).twice() / 2;
}

int AngularState::n2() const {
    return (j - m).twice() / 2;
}

ComplexMatrix restrict_to_j(const ComplexMatrix &op, HalfInteger j) {
    int k = dim_of(j);
    if (op.rows() != k * k || op.cols() != k * k) {
        throw std::invalid_argument("restrict_to_j: operator is not on the (2j+1)^2 tensor space");
    }
    std::vector<int> sub(k);
    std::vector<bool> inside(k * k, false);
    for (int n = 0; n < k; n++) {
        AngularState s = AngularState::from_index(j, n);
        sub[n] = tensor_index(k, s.n1(), s.n2());
        inside[sub[n]] = true;
    }
    ComplexMatrix out(k, k);
    for (int c = 0; c < k; c++) {
        double leak = 0;
        for (int row = 0; row < k * k; row++) {
            if (!inside[row]) {
                leak = std::max(leak, std::abs(op(row, sub[c])));
            }
        }
        if (leak > 1e-12) {
            throw SubspaceLeak("operator leaves the j = " + j.str() + " subspace");
        }
        for (int rr = 0; rr < k; rr++) {
            out(rr, c) = op(sub[rr], sub[c]);
        }
    }
    return out;
}

Su2Triple su2_generators(HalfInteger j, Rational r, int a) {
    int k = dim_of(j);
    ComplexMatrix h = build_h(k).cast<Complex>();
    ComplexMatrix v = build_vra_quonic(k, r, a);
    ComplexMatrix h2 = h * h;
    Su2Triple t;
    t.r = r;
    t.a = a;
    t.j_plus = restrict_to_j(h * v, j);
    t.j_minus = restrict_to_j(v.adjoint() * h, j);
    t.j_z = restrict_to_j(0.5 * (h2 - v.adjoint() * h2 * v), j);
    return t;
}

ComplexMatrix casimir(const Su2Triple &t) {
    ComplexMatrix id = ComplexMatrix::Identity(t.j_z.rows(), t.j_z.cols());
    return t.j_plus * t.j_minus + t.j_z * (t.j_z - id);
}

PhaseMatrix eigenbasis_exact(HalfInteger j, Rational r, int a) {
    int k = dim_of(j);
    check_a(a, k);
    std::int64_t tj = j.twice();
    PhaseMatrix out(k, Amplitude::kInvSqrtDim);
    for (int n = 0; n < k; n++) {
        std::int64_t j_plus_m = tj - n;
        Rational jm = Rational(tj * (tj - 2 * n), 4);
        for (int alpha = 0; alpha < k; alpha++) {
            Rational e = Rational(j_plus_m * (n + 1) * a, 2) - jm * r + Rational(j_plus_m * alpha);
            out.set(n, alpha, ExactPhase::root_of_unity(k, e));
        }
    }
    return out;
}

std::vector<ComplexVector> eigenbasis(HalfInteger j, Rational r, int a) {
    PhaseMatrix m = eigenbasis_exact(j, r, a);
    std::vector<ComplexVector> out;
    for (int alpha = 0; alpha < m.dim(); alpha++) {
        out.push_back(m.column(alpha));
    }
    return out;
}

ExactPhase eigenvalue(HalfInteger j, Rational r, int a, int alpha) {
    int k = dim_of(j);
    return ExactPhase::root_of_unity(k, j.to_rational() * (r + Rational(a)) - Rational(alpha));
}

Complex overlap_same_a(HalfInteger j, Rational r, Rational s, int a, int alpha, int beta) {
    int k = dim_of(j);
    check_a(a, k);
    Rational x = j.to_rational() * (s - r) + Rational(alpha - beta);
    Complex phase = ExactPhase::root_of_unity(k, j.to_rational() * Rational(beta - alpha)).to_complex();
    Rational ratio = x / Rational(k);
    double value;
    if (ratio.denominator() == 1) {
        // 0/0: the limit is (-1)^{x (k - 1) / k}.
        std::int64_t p = ratio.numerator() * (k - 1);
        value = (p % 2 == 0) ? 1.0 : -1.0;
    } else if (x.denominator() == 1) {
        value = 0;
    } else {
        double xd = to_double(x);
        value = std::sin(std::numbers::pi * xd) / std::sin(std::numbers::pi * xd / k) / k;
    }
    return phase * value;
}

PhaseMatrix rotation_operator(HalfInteger j, int p) {
    int k = dim_of(j);
    std::vector<ExactPhase> ph;
    for (int n = 0; n < k; n++) {
        ph.push_back(ExactPhase::root_of_unity(k, Rational((std::int64_t)p * n)));
    }
    return PhaseMatrix::diagonal(ph);
}

}  // namespace qmub
