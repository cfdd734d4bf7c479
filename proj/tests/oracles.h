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

// Reference implementations used only by tests. None of these call into the
// library code they are compared against.

#ifndef QMUB_TESTS_ORACLES_H
#define QMUB_TESTS_ORACLES_H

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline C cis(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

/// (F_ra)_{nm} from the closed formula, all in double precision.
inline CMat fra(int d, double r, int a) {
    CMat f(d, d);
    double dd = d;
    for (int n = 0; n < d; n++) {
        for (int m = 0; m < d; m++) {
            double nu = n * (dd - n) * a / 2.0 + (dd - 1) * (dd - 1) * r / 4.0 + n * (m - (dd - 1) * r / 2.0);
            f(n, m) = cis(2 * std::numbers::pi * nu / dd) / std::sqrt(dd);
        }
    }
    return f;
}

/// Ordinary DFT matrix q^{nm}/sqrt(d).
inline CMat dft(int d) {
    return fra(d, 0, 0);
}

/// Hand-rolled Gaussian elimination with partial pivoting.
inline C gauss_det(CMat m) {
    const int n = (int)m.rows();
    C det = 1;
    for (int col = 0; col < n; col++) {
        int piv = col;
        for (int row = col + 1; row < n; row++) {
            if (std::abs(m(row, col)) > std::abs(m(piv, col))) {
                piv = row;
            }
        }
        if (std::abs(m(piv, col)) == 0) {
            return 0;
        }
        if (piv != col) {
            m.row(piv).swap(m.row(col));
            det = -det;
        }
        det *= m(col, col);
        for (int row = col + 1; row < n; row++) {
            C factor = m(row, col) / m(col, col);
            for (int k = col; k < n; k++) {
                m(row, k) -= factor * m(col, k);
            }
        }
    }
    return det;
}

/// Sum of exp(i pi (u k^2 + v k) / w) accumulated term by term in long double.
inline C gauss_sum(long long u, double v, long long w) {
    long double re = 0, im = 0;
    long long n = w < 0 ? -w : w;
    for (long long k = 0; k < n; k++) {
        // Reduce u k^2 modulo 2w before scaling to keep the angle small.
        long long uk2 = (u % (2 * n)) * ((k * k) % (2 * n)) % (2 * n);
        long double ang = std::numbers::pi_v<long double> * ((long double)uk2 + (long double)v * k) / (long double)w;
        re += std::cos(ang);
        im += std::sin(ang);
    }
    return {(double)re, (double)im};
}

/// Closed form of sum_{k<n} z^k.
inline C geometric(C z, int n) {
    if (std::abs(z - 1.0) < 1e-15) {
        return (double)n;
    }
    return (1.0 - std::pow(z, n)) / (1.0 - z);
}

/// Product-basis index of (m1, m2) with m = j - n labelling inside each factor.
struct CouplingSpace {
    int tj1, tj2;  // doubled j
    int dim1() const {
        return tj1 + 1;
    }
    int dim2() const {
        return tj2 + 1;
    }
    int index(int tm1, int tm2) const {
        return ((tj1 - tm1) / 2) * dim2() + (tj2 - tm2) / 2;
    }
};

inline Eigen::MatrixXd ladder(int tj, int sign) {
    int d = tj + 1;
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(d, d);
    for (int n = 0; n < d; n++) {
        int tm = tj - 2 * n;
        int tm_new = tm + 2 * sign;
        if (tm_new > tj || tm_new < -tj) {
            continue;
        }
        double j = tj / 2.0, m = tm / 2.0;
        double c = std::sqrt(j * (j + 1) - m * (m + sign));
        l((tj - tm_new) / 2, n) = c;
    }
    return l;
}

/// Clebsch-Gordan coefficients by brute force: the highest weight of J = j3 is
/// the kernel of J+ on the M = j3 subspace, fixed by the Condon-Shortley sign,
/// then lowered with J-. Returns <j1 m1 j2 m2 | j3 m3>; arguments doubled.
inline double clebsch_gordan(int tj1, int tm1, int tj2, int tm2, int tj3, int tm3) {
    if (tm1 + tm2 != tm3 || tj3 > tj1 + tj2 || tj3 < std::abs(tj1 - tj2) || (tj1 + tj2 + tj3) % 2 != 0) {
        return 0;
    }
    CouplingSpace s{tj1, tj2};
    const int dim = s.dim1() * s.dim2();
    Eigen::MatrixXd i1 = Eigen::MatrixXd::Identity(s.dim1(), s.dim1());
    Eigen::MatrixXd i2 = Eigen::MatrixXd::Identity(s.dim2(), s.dim2());
    auto kron = [](const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
        Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
        for (int i = 0; i < a.rows(); i++) {
            for (int j = 0; j < a.cols(); j++) {
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
            }
        }
        return out;
    };
    Eigen::MatrixXd jp = kron(ladder(tj1, +1), i2) + kron(i1, ladder(tj2, +1));
    Eigen::MatrixXd jm = jp.transpose();

    std::vector<int> sub;
    for (int a = -tj1; a <= tj1; a += 2) {
        int b = tj3 - a;
        if (b >= -tj2 && b <= tj2) {
            sub.push_back(s.index(a, b));
        }
    }
    Eigen::MatrixXd restricted(dim, sub.size());
    for (size_t k = 0; k < sub.size(); k++) {
        restricted.col(k) = jp.col(sub[k]);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(restricted, Eigen::ComputeFullV);
    Eigen::VectorXd kernel = svd.matrixV().col(sub.size() - 1);
    Eigen::VectorXd top = Eigen::VectorXd::Zero(dim);
    for (size_t k = 0; k < sub.size(); k++) {
        top(sub[k]) = kernel(k);
    }
    int ref = s.index(tj1, tj3 - tj1);
    if (tj3 - tj1 < -tj2 || top(ref) == 0) {
        // Condon-Shortley reference coefficient sits at m1 = j1.
        return 0;
    }
    if (top(ref) < 0) {
        top = -top;
    }
    top.normalize();
    for (int tm = tj3; tm > tm3; tm -= 2) {
        top = jm * top;
        top.normalize();
    }
    return top(s.index(tm1, tm2));
}

/// Wigner 3-jm from the oracle Clebsch-Gordan coefficient.
inline double wigner_3jm(int tj1, int tm1, int tj2, int tm2, int tj3, int tm3) {
    int e = (tj1 - tj2 - tm3) / 2;
    double sign = (e % 2 == 0) ? 1 : -1;
    return sign / std::sqrt(tj3 + 1.0) * clebsch_gordan(tj1, tm1, tj2, tm2, tj3, -tm3);
}

/// <j, m | j alpha> = q^{(j + m) alpha} / sqrt(2j + 1).
inline C basis_change(int tj, int tm, int alpha) {
    int k = tj + 1;
    int jpm = (tj + tm) / 2;
    return cis(2 * std::numbers::pi * (double)((jpm * alpha) % k) / k) / std::sqrt((double)k);
}

/// The alpha-scheme coupling coefficient as an explicit change of basis of the
/// oracle Clebsch-Gordan table.
inline C cg_alpha(int tj1, int tj2, int a1, int a2, int tj3, int a3) {
    C sum = 0;
    for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
        for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
            int tm3 = tm1 + tm2;
            if (std::abs(tm3) > tj3) {
                continue;
            }
            sum += std::conj(basis_change(tj1, tm1, a1)) * std::conj(basis_change(tj2, tm2, a2)) *
                   clebsch_gordan(tj1, tm1, tj2, tm2, tj3, tm3) * basis_change(tj3, tm3, a3);
        }
    }
    return sum;
}

/// y_n = sum_m F(m, n) x_m with F the DFT, by the textbook double loop.
inline CVec naive_dft(const CVec &x) {
    const int d = (int)x.size();
    CVec y = CVec::Zero(d);
    for (int n = 0; n < d; n++) {
        for (int m = 0; m < d; m++) {
            y(n) += cis(2 * std::numbers::pi * (double)((n * m) % d) / d) / std::sqrt((double)d) * x(m);
        }
    }
    return y;
}

}  // namespace oracle

#endif
