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

#include "qmub/weyl_pauli.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmub/qdft.h"

namespace qmub {

namespace {

void check_dim(int d) {
    if (d < 2) {
        throw std::invalid_argument("d must be at least 2");
    }
}

ExactPhase q_pow(int d, std::int64_t e) {
    return ExactPhase::root_of_unity(d, Rational(e));
}

}  // namespace

int mod(int x, int d) {
    int r = x % d;
    return r < 0 ? r + d : r;
}

PhaseMatrix x_matrix(int d) {
    check_dim(d);
    PhaseMatrix x(d, Amplitude::kOne);
    for (int n = 0; n + 1 < d; n++) {
        x.set(n, n + 1, ExactPhase());
    }
    x.set(d - 1, 0, ExactPhase());
    return x;
}

PhaseMatrix z_matrix(int d) {
    check_dim(d);
    PhaseMatrix z(d, Amplitude::kOne);
    for (int n = 0; n < d; n++) {
        z.set(n, n, q_pow(d, n));
    }
    return z;
}

PhaseMatrix pr_matrix(int d, Rational r) {
    PhaseMatrix p = PhaseMatrix::identity(d);
    p.set(d - 1, d - 1, ExactPhase::half_turns(Rational(d - 1) * r));
    return p;
}

PhaseMatrix vra_matrix(int d, Rational r, int a) {
    QdftParams{d, r, a}.validate();
    PhaseMatrix v(d, Amplitude::kOne);
    for (int n = 1; n < d; n++) {
        v.set(n - 1, n, q_pow(d, (std::int64_t)n * a));
    }
    v.set(d - 1, 0, ExactPhase::half_turns(Rational(d - 1) * r));
    return v;
}

ComplexMatrix diagonalize_vra(int d, Rational r, int a) {
    ComplexMatrix h = hra_matrix(QdftParams{d, r, a}).to_complex();
    return h.adjoint() * vra_matrix(d, r, a).to_complex() * h;
}

PhaseMatrix u_ab(int d, PauliIndex idx) {
    return exact_multiply(exact_pow(x_matrix(d), idx.a), exact_pow(z_matrix(d), idx.b));
}

bool weyl_relation_check(int d, int m, int n) {
    PhaseMatrix x = x_matrix(d);
    PhaseMatrix z = z_matrix(d);
    PhaseMatrix xm = exact_pow(x, m);
    PhaseMatrix zn = exact_pow(z, n);
    bool ok = exact_multiply(xm, zn) == exact_multiply(zn, xm).scaled(q_pow(d, (std::int64_t)m * n));
    PhaseMatrix id = PhaseMatrix::identity(d);
    ok = ok && exact_pow(x, d) == id && exact_pow(z, d) == id;
    ComplexMatrix f = fra_matrix(QdftParams{d, Rational(0), 0}).to_complex();
    ok = ok && max_abs_diff(f.adjoint() * x.to_complex() * f, z.to_complex()) <= 1e-10;
    return ok;
}

double pauli_trace_orthogonality(int d) {
    std::vector<PhaseMatrix> us;
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            us.push_back(u_ab(d, {a, b}));
        }
    }
    double worst = 0;
    for (size_t i = 0; i < us.size(); i++) {
        PhaseMatrix ui = us[i].adjoint();
        for (size_t j = 0; j < us.size(); j++) {
            PhaseSum tr = exact_multiply(ui, us[j]).trace_phases();
            double expected = i == j ? d : 0;
            double dev;
            if (auto n = tr.exact_integer()) {
                dev = std::abs((double)*n - expected);
            } else if (tr.is_exact_zero()) {
                dev = expected;
            } else {
                // Not decidable by the exact rules; fall back to the float value.
                dev = std::abs(tr.value() - Complex(expected, 0));
            }
            worst = std::max(worst, dev);
        }
    }
    return worst;
}

CommutatorCheck uab_commutators(int d, PauliIndex u, PauliIndex v) {
    PhaseMatrix mu = u_ab(d, u);
    PhaseMatrix mv = u_ab(d, v);
    PhaseMatrix sum = u_ab(d, {mod(u.a + v.a, d), mod(u.b + v.b, d)});
    ExactPhase c1 = q_pow(d, -(std::int64_t)u.b * v.a);
    ExactPhase c2 = q_pow(d, -(std::int64_t)u.a * v.b);
    CommutatorCheck out;
    PhaseMatrix uv = exact_multiply(mu, mv);
    PhaseMatrix vu = exact_multiply(mv, mu);
    out.products_ok = uv == sum.scaled(c1) && vu == sum.scaled(c2);
    out.commutes = uv == vu;
    out.anticommutes = uv == vu.scaled(ExactPhase::from_fraction(1, 2));
    int symp = mod(u.a * v.b - u.b * v.a, d);
    out.commutator_rule_ok = out.commutes == (symp == 0);
    out.anticommutator_rule_ok = out.anticommutes == (d % 2 == 0 && symp == d / 2);
    return out;
}

PauliGroupElement pauli_reduce(int d, PauliGroupElement g) {
    return {mod(g.a, d), mod(g.b, d), mod(g.c, d)};
}

PauliGroupElement pauli_compose(int d, PauliGroupElement g, PauliGroupElement h) {
    return pauli_reduce(d, {g.a + h.a - g.c * h.b, g.b + h.b, g.c + h.c});
}

PauliGroupElement pauli_inverse(int d, PauliGroupElement g) {
    return pauli_reduce(d, {-g.a - g.b * g.c, -g.b, -g.c});
}

PauliGroupElement pauli_group_commutator(int d, PauliGroupElement g, PauliGroupElement h) {
    PauliGroupElement gh = pauli_compose(d, g, h);
    return pauli_compose(d, pauli_compose(d, gh, pauli_inverse(d, g)), pauli_inverse(d, h));
}

PhaseMatrix to_matrix(int d, PauliGroupElement g) {
    g = pauli_reduce(d, g);
    return u_ab(d, {g.b, g.c}).scaled(q_pow(d, g.a));
}

std::vector<PauliGroupElement> pauli_center(int d) {
    std::vector<PauliGroupElement> all;
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            for (int c = 0; c < d; c++) {
                all.push_back({a, b, c});
            }
        }
    }
    std::vector<PauliGroupElement> center;
    for (const auto &g : all) {
        bool central = true;
        for (const auto &h : all) {
            if (!(pauli_compose(d, g, h) == pauli_compose(d, h, g))) {
                central = false;
                break;
            }
        }
        if (central) {
            center.push_back(g);
        }
    }
    return center;
}

PhaseMatrix t_matrix(int d, SineIndex s) {
    check_dim(d);
    PhaseMatrix zx = exact_multiply(exact_pow(z_matrix(d), s.n1), exact_pow(x_matrix(d), s.n2));
    return zx.scaled(ExactPhase::root_of_unity(d, Rational((std::int64_t)s.n1 * s.n2, 2)));
}

bool sine_commutator_check(int d, SineIndex m, SineIndex n) {
    std::int64_t cross = (std::int64_t)m.n1 * n.n2 - (std::int64_t)m.n2 * n.n1;
    PhaseMatrix tm = t_matrix(d, m);
    PhaseMatrix tn = t_matrix(d, n);
    PhaseMatrix tsum = t_matrix(d, {m.n1 + n.n1, m.n2 + n.n2});
    bool exact_ok = exact_multiply(tm, tn) == tsum.scaled(ExactPhase::root_of_unity(d, Rational(-cross, 2)));
    ComplexMatrix lhs = commutator(tm.to_complex(), tn.to_complex());
    Complex coeff = Complex(0, -2) * std::sin(std::numbers::pi * (double)cross / d);
    return exact_ok && max_abs_diff(lhs, coeff * tsum.to_complex()) <= 1e-12;
}

bool regular_representation_check(int d) {
    Eigen::ComplexEigenSolver<ComplexMatrix> es(x_matrix(d).to_complex());
    if (es.info() != Eigen::Success) {
        return false;
    }
    std::vector<bool> seen(d, false);
    for (int i = 0; i < d; i++) {
        Complex ev = es.eigenvalues()(i);
        int k = mod((int)std::lround(std::arg(ev) / (2 * std::numbers::pi) * d), d);
        if (seen[k] || std::abs(ev - q_pow(d, k).to_complex()) > 1e-10) {
            return false;
        }
        seen[k] = true;
    }
    return true;
}

}  // namespace qmub
