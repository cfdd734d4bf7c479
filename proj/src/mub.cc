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

#include "qmub/mub.h"

#include <cmath>
#include <set>
#include <stdexcept>

namespace qmub {

namespace {

void require_prime(int p) {
    if (!is_prime(p)) {
        throw std::invalid_argument(
            std::to_string(p) +
            " is not prime; a complete set is only built for prime dimension (composite d supports the three-MUB mode)");
    }
}

Basis from_phase_matrix(PhaseMatrix m, BasisLabel label) {
    Basis b;
    b.dim = m.dim();
    b.vectors = m.to_complex();
    b.exact = std::move(m);
    b.label = label;
    return b;
}

Basis w_basis(int a, int b) {
    // Two-qubit factors |a alpha; 0> are the columns of H_a0 at d = 2.
    ComplexMatrix ha = hra_matrix(QdftParams{2, Rational(0), a}).to_complex();
    ComplexMatrix hb = hra_matrix(QdftParams{2, Rational(0), b}).to_complex();
    ComplexMatrix cols(4, 4);
    if (a == b) {
        const int order[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        for (int c = 0; c < 4; c++) {
            cols.col(c) = kron(ComplexVector(ha.col(order[c][0])), ComplexVector(hb.col(order[c][1])));
        }
    } else {
        const Complex lambda(0.5, -0.5);
        const Complex mu(0.5, 0.5);
        const int order[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
        for (int c = 0; c < 4; c++) {
            int al = order[c][0], be = order[c][1];
            cols.col(c) = lambda * kron(ComplexVector(ha.col(al)), ComplexVector(hb.col(be))) +
                          mu * kron(ComplexVector(ha.col(1 - al)), ComplexVector(hb.col(1 - be)));
        }
    }
    Basis out;
    out.dim = 4;
    out.vectors = cols;
    out.exact = snap_to_phases(cols, Amplitude::kInvSqrtDim, 8, 1e-12);
    out.label = WLabel{a, b};
    return out;
}

}  // namespace

std::string label_string(const BasisLabel &label) {
    if (std::holds_alternative<ComputationalLabel>(label)) {
        return "computational";
    }
    if (const auto *ra = std::get_if<RaLabel>(&label)) {
        return "B(r=" + to_string(ra->r) + ",a=" + std::to_string(ra->a) + ")";
    }
    const auto &w = std::get<WLabel>(label);
    return "W" + std::to_string(w.a) + std::to_string(w.b);
}

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int f = 2; f * f <= n; f++) {
        if (n % f == 0) {
            return false;
        }
    }
    return true;
}

Basis computational_basis(int d) {
    return from_phase_matrix(PhaseMatrix::identity(d), ComputationalLabel{});
}

Basis ra_basis(int d, Rational r, int a) {
    return from_phase_matrix(hra_matrix(QdftParams{d, r, a}), RaLabel{r, a});
}

MubSet mub_prime(int p, Rational r) {
    require_prime(p);
    MubSet set;
    set.dim = p;
    for (int a = 0; a < p; a++) {
        set.bases.push_back(ra_basis(p, r, a));
    }
    set.bases.push_back(computational_basis(p));
    set.declared_complete = true;
    return set;
}

MubSet three_mub(int d, int a) {
    QdftParams{d, Rational(0), a}.validate();
    MubSet set;
    set.dim = d;
    set.bases.push_back(ra_basis(d, Rational(0), a));
    set.bases.push_back(ra_basis(d, Rational(0), (a + 1) % d));
    set.bases.push_back(computational_basis(d));
    return set;
}

double unbiasedness(const Basis &b1, const Basis &b2) {
    if (b1.dim != b2.dim) {
        throw std::invalid_argument("unbiasedness: dimension mismatch");
    }
    return unbiasedness_deviation(b1.vectors, b2.vectors);
}

double max_pairwise_deviation(const MubSet &set) {
    double worst = 0;
    for (size_t i = 0; i < set.bases.size(); i++) {
        for (size_t j = i + 1; j < set.bases.size(); j++) {
            worst = std::max(worst, unbiasedness(set.bases[i], set.bases[j]));
        }
    }
    return worst;
}

Complex gauss_inner_product(int p, [[maybe_unused]] Rational r, int a, int alpha, int b, int beta) {
    require_prime(p);
    if (a == b) {
        throw std::invalid_argument("gauss_inner_product needs a != b");
    }
    std::int64_t u = a - b;
    Rational v(-(std::int64_t)(a - b) * p - 2 * (std::int64_t)(alpha - beta));
    return gauss_sum(u, v, p) / (double)p;
}

ProductHadamard product_hadamard(int d, Rational r, int a, int b) {
    ComplexMatrix fa = fra_matrix(QdftParams{d, r, a}).to_complex();
    ComplexMatrix fb = fra_matrix(QdftParams{d, r, b}).to_complex();
    ProductHadamard out;
    out.product = fa.adjoint() * fb;
    out.report = is_generalized_hadamard(out.product);
    return out;
}

MubSet mub_dim4() {
    MubSet set;
    set.dim = 4;
    set.bases.push_back(computational_basis(4));
    set.bases.push_back(w_basis(0, 0));
    set.bases.push_back(w_basis(1, 1));
    set.bases.push_back(w_basis(0, 1));
    set.bases.push_back(w_basis(1, 0));
    set.declared_complete = true;
    return set;
}

double entanglement_det(const ComplexVector &state, int d) {
    if (state.size() != (Eigen::Index)d * d) {
        throw std::invalid_argument("entanglement_det: state length must be d^2");
    }
    ComplexMatrix a(d, d);
    for (int k = 0; k < d; k++) {
        for (int l = 0; l < d; l++) {
            a(k, l) = state(k * d + l);
        }
    }
    return std::abs(determinant(a));
}

std::vector<CommutingClass> commuting_classes(int p) {
    require_prime(p);
    std::vector<CommutingClass> out;
    for (int cls = 0; cls <= p; cls++) {
        CommutingClass c;
        c.label = cls;
        for (int x = 1; x < p; x++) {
            if (cls == 0) {
                c.members.push_back({0, x});
            } else if (cls == 1) {
                c.members.push_back({x, 0});
            } else {
                c.members.push_back({x, (cls - 1) * x % p});
            }
        }
        out.push_back(c);
    }
    return out;
}

PartitionReport sl_partition_check(int p) {
    auto classes = commuting_classes(p);
    PartitionReport rep;
    std::set<std::pair<int, int>> seen;
    size_t total = 0;
    for (const auto &c : classes) {
        for (const auto &m : c.members) {
            seen.insert({m.a, m.b});
            total++;
        }
    }
    rep.partition_ok = total == (size_t)(p * p - 1) && seen.size() == total && !seen.count({0, 0});

    rep.abelian_ok = true;
    for (const auto &c : classes) {
        std::vector<PhaseMatrix> ms;
        for (const auto &m : c.members) {
            ms.push_back(u_ab(p, m));
        }
        for (size_t i = 0; i < ms.size(); i++) {
            for (size_t j = i + 1; j < ms.size(); j++) {
                if (!(exact_multiply(ms[i], ms[j]) == exact_multiply(ms[j], ms[i]))) {
                    rep.abelian_ok = false;
                }
            }
        }
    }

    // Trace Gram matrix over the p^2 - 1 non-identity operators must be p I.
    rep.independent_ok = true;
    std::vector<PhaseMatrix> all;
    for (const auto &[a, b] : seen) {
        all.push_back(u_ab(p, {a, b}));
    }
    for (size_t i = 0; i < all.size() && rep.independent_ok; i++) {
        PhaseMatrix ai = all[i].adjoint();
        for (size_t j = 0; j < all.size(); j++) {
            PhaseSum tr = exact_multiply(ai, all[j]).trace_phases();
            bool ok = i == j ? tr.exact_integer() == std::optional<std::int64_t>(p) : tr.is_exact_zero();
            if (!ok) {
                rep.independent_ok = false;
                break;
            }
        }
    }
    return rep;
}

double phase_insensitive_distance(const ComplexMatrix &u, const ComplexMatrix &v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw std::invalid_argument("phase_insensitive_distance: shape mismatch");
    }
    double worst = 0;
    for (Eigen::Index c = 0; c < u.cols(); c++) {
        Eigen::Index k;
        u.col(c).cwiseAbs().maxCoeff(&k);
        Complex align = 0;
        if (std::abs(v(k, c)) > 0) {
            align = (u(k, c) / v(k, c));
            align /= std::abs(align);
        }
        worst = std::max(worst, (u.col(c) - align * v.col(c)).cwiseAbs().maxCoeff());
    }
    return worst;
}

}  // namespace qmub
