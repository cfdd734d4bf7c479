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

#include "qmub/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qmub/mub.h"
#include "qmub/qdft.h"
#include "qmub/quon_su2.h"
#include "qmub/weyl_pauli.h"
#include "qmub/wigner_racah.h"

namespace qmub {

namespace {

constexpr int kExhaustiveDim = 8;

class Check {
   public:
    Check(std::string suite, std::string name, double tolerance)
        : result_{std::move(suite), std::move(name), 0, 0, tolerance} {
    }

    void exact(bool ok) {
        result_.cases++;
        if (!ok) {
            result_.max_residual = std::max(result_.max_residual, 1.0);
        }
    }

    void residual(double r) {
        result_.cases++;
        if (std::isnan(r)) {
            r = INFINITY;
        }
        result_.max_residual = std::max(result_.max_residual, r);
    }

    InvariantResult done() const {
        return result_;
    }

   private:
    InvariantResult result_;
};

using Out = std::vector<InvariantResult>;

std::mt19937_64 rng_for(const VerifyOptions &opts, std::uint64_t salt) {
    std::seed_seq seq{opts.seed, salt};
    return std::mt19937_64(seq);
}

int uniform(std::mt19937_64 &rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

ComplexVector random_vector(std::mt19937_64 &rng, int n) {
    std::normal_distribution<double> g;
    ComplexVector v(n);
    for (int i = 0; i < n; i++) {
        v(i) = Complex(g(rng), g(rng));
    }
    return v;
}

ExactPhase q_pow(int d, std::int64_t e) {
    return ExactPhase::root_of_unity(d, Rational(e));
}

double trace_deviation(int d, PauliIndex u, PauliIndex v) {
    PhaseSum tr = exact_multiply(u_ab(d, u).adjoint(), u_ab(d, v)).trace_phases();
    double expected = (u == v) ? d : 0;
    if (auto n = tr.exact_integer()) {
        return std::abs((double)*n - expected);
    }
    if (tr.is_exact_zero()) {
        return expected;
    }
    return std::abs(tr.value() - Complex(expected));
}

const Rational kHalf(1, 2);

// ---------------------------------------------------------------- weyl

Out weyl_suite(const VerifyOptions &opts) {
    auto rng = rng_for(opts, 1);
    const std::string s = "weyl";
    Check xmzn(s, "X^m Z^n = q^{mn} Z^n X^m, X^d = Z^d = I, F^dag X F = Z", 0);
    Check qcom(s, "V_ra Z = q Z V_ra; V_ra X = q^{-a} P_r X P_r^dag V_ra (= q^{-a} X V_ra when P_r = I)", 0);
    Check decomposition(s, "V_ra = P_r X Z^a", 0);
    Check vmzn(s, "(V_ra)^m Z^n = q^{mn} Z^n (V_ra)^m", 0);
    Check power(s, "(V_ra)^n = q^{-n(n-1)a/2} (V_r0)^n Z^{an}, (V_ra)^d = e^{i pi (d-1)(r+a)} I", 0);
    Check trace(s, "tr(u_ab^dag u_a'b') = d delta delta", 0);
    Check compose(s, "pauli_compose matches matrix products; group commutator", 0);
    Check center(s, "center of the Pauli group is {q^a I} (d <= 4)", 0);
    Check comm(s, "u_ab commutator and anticommutator rules", 0);
    Check sine(s, "T_m T_n = q^{-(m x n)/2} T_{m+n} and sine commutator", 0);
    Check regular(s, "spectrum of X is the d-th roots of unity", 0);
    Check diag(s, "H_ra^dag V_ra H_ra = q^{(d-1)(r+a)/2} diag(q^{-alpha})", 1e-10);
    Check character(s, "V_0a entries are the character vector of C_d", 0);

    const Rational rs[] = {Rational(0), Rational(1), Rational(1, 4)};
    for (int d = 2; d <= opts.d_max; d++) {
        bool exhaustive = d <= kExhaustiveDim;
        PhaseMatrix x = x_matrix(d), z = z_matrix(d), id = PhaseMatrix::identity(d);

        if (exhaustive) {
            for (int m = 0; m < d; m++) {
                for (int n = 0; n < d; n++) {
                    xmzn.exact(weyl_relation_check(d, m, n));
                }
            }
        } else {
            for (int t = 0; t < 40; t++) {
                xmzn.exact(weyl_relation_check(d, uniform(rng, -2 * d, 2 * d), uniform(rng, -2 * d, 2 * d)));
            }
        }

        for (Rational r : rs) {
            for (int a = 0; a < d; a++) {
                PhaseMatrix v = vra_matrix(d, r, a);
                qcom.exact(exact_multiply(v, z) == exact_multiply(z, v).scaled(q_pow(d, 1)));
                PhaseMatrix pr = pr_matrix(d, r);
                PhaseMatrix pxp = exact_multiply(exact_multiply(pr, x), pr.adjoint());
                qcom.exact(exact_multiply(v, x) == exact_multiply(pxp, v).scaled(q_pow(d, -a)));
                if (pr == id) {
                    qcom.exact(exact_multiply(v, x) == exact_multiply(x, v).scaled(q_pow(d, -a)));
                }
                decomposition.exact(v == exact_multiply(exact_multiply(pr_matrix(d, r), x), exact_pow(z, a)));

                auto vmzn_case = [&](int m, int n) {
                    PhaseMatrix vm = exact_pow(v, m), zn = exact_pow(z, n);
                    vmzn.exact(exact_multiply(vm, zn) ==
                               exact_multiply(zn, vm).scaled(q_pow(d, (std::int64_t)m * n)));
                };
                if (exhaustive) {
                    for (int m = 0; m < d; m++) {
                        for (int n = 0; n < d; n++) {
                            vmzn_case(m, n);
                        }
                    }
                } else {
                    for (int t = 0; t < 10; t++) {
                        vmzn_case(uniform(rng, 0, d - 1), uniform(rng, 0, d - 1));
                    }
                }

                PhaseMatrix v0 = vra_matrix(d, r, 0);
                for (int n = 0; n <= d; n++) {
                    PhaseMatrix rhs = exact_multiply(exact_pow(v0, n), exact_pow(z, (std::int64_t)a * n))
                                          .scaled(ExactPhase::root_of_unity(d, Rational(-(std::int64_t)n * (n - 1) * a, 2)));
                    power.exact(exact_pow(v, n) == rhs);
                }
                power.exact(exact_pow(v, d) == id.scaled(ExactPhase::half_turns(Rational(d - 1) * (r + Rational(a)))));
                power.exact(exact_pow(v0, d).scaled(ExactPhase::half_turns(-Rational(d - 1) * r)) == id);

                ComplexMatrix expected = ComplexMatrix::Zero(d, d);
                for (int alpha = 0; alpha < d; alpha++) {
                    expected(alpha, alpha) =
                        ExactPhase::root_of_unity(d, Rational(d - 1) * (r + Rational(a)) / Rational(2) - Rational(alpha))
                            .to_complex();
                }
                diag.residual(max_abs_diff(diagonalize_vra(d, r, a), expected));
            }
        }

        for (int a = 0; a < d; a++) {
            PhaseMatrix v = vra_matrix(d, Rational(0), a);
            bool ok = true;
            for (int n = 0; n < d; n++) {
                int row = n == 0 ? d - 1 : n - 1;
                ok = ok && v.at(row, n) == q_pow(d, (std::int64_t)n * a);
            }
            character.exact(ok);
        }

        if (exhaustive) {
            trace.exact(pauli_trace_orthogonality(d) == 0);
        } else {
            for (int t = 0; t < 200; t++) {
                PauliIndex u{uniform(rng, 0, d - 1), uniform(rng, 0, d - 1)};
                PauliIndex w = (t % 4 == 0) ? u : PauliIndex{uniform(rng, 0, d - 1), uniform(rng, 0, d - 1)};
                trace.exact(trace_deviation(d, u, w) == 0);
            }
        }

        for (int t = 0; t < 200; t++) {
            PauliGroupElement g{uniform(rng, 0, d - 1), uniform(rng, 0, d - 1), uniform(rng, 0, d - 1)};
            PauliGroupElement h{uniform(rng, 0, d - 1), uniform(rng, 0, d - 1), uniform(rng, 0, d - 1)};
            compose.exact(exact_multiply(to_matrix(d, g), to_matrix(d, h)) == to_matrix(d, pauli_compose(d, g, h)));
            PauliGroupElement expected = pauli_reduce(d, {g.b * h.c - g.c * h.b, 0, 0});
            compose.exact(pauli_group_commutator(d, g, h) == expected);
        }
        if (d <= 4) {
            auto c = pauli_center(d);
            bool ok = (int)c.size() == d;
            for (const auto &g : c) {
                ok = ok && g.b == 0 && g.c == 0;
            }
            center.exact(ok);
        }

        if (exhaustive) {
            for (int a = 0; a < d; a++) {
                for (int b = 0; b < d; b++) {
                    for (int a2 = 0; a2 < d; a2++) {
                        for (int b2 = 0; b2 < d; b2++) {
                            comm.exact(uab_commutators(d, {a, b}, {a2, b2}).ok());
                        }
                    }
                }
            }
        } else {
            for (int t = 0; t < 200; t++) {
                PauliIndex u{uniform(rng, 0, d - 1), uniform(rng, 0, d - 1)};
                PauliIndex w{uniform(rng, 0, d - 1), uniform(rng, 0, d - 1)};
                comm.exact(uab_commutators(d, u, w).ok());
            }
        }

        int sine_samples = exhaustive ? 100 : 40;
        for (int t = 0; t < sine_samples; t++) {
            SineIndex m{uniform(rng, -2 * d, 2 * d), uniform(rng, -2 * d, 2 * d)};
            SineIndex n{uniform(rng, -2 * d, 2 * d), uniform(rng, -2 * d, 2 * d)};
            sine.exact(sine_commutator_check(d, m, n));
        }

        regular.exact(regular_representation_check(d));
    }
    return {xmzn.done(), qcom.done(), decomposition.done(), vmzn.done(), power.done(), trace.done(),
            compose.done(), center.done(), comm.done(), sine.done(), regular.done(), diag.done(),
            character.done()};
}

// ---------------------------------------------------------------- qdft

Out qdft_suite(const VerifyOptions &opts) {
    auto rng = rng_for(opts, 2);
    const std::string s = "qdft";
    Check unitary(s, "F_ra unitary", 1e-10);
    Check hadamard(s, "F_ra is a generalized Hadamard matrix", 1e-10);
    Check sym(s, "row symmetry relations of F_ra", 0);
    Check factor(s, "F_ra = D_ra F", 0);
    Check rows(s, "H_ra row n equals F_ra row d-1-n", 0);
    Check f4(s, "F^4 = I", 1e-10);
    Check trace(s, "closed-form trace equals direct trace", 1e-10);
    Check trace6(s, "tr F_02 = sqrt(6) at d = 6", 1e-10);
    Check det(s, "det F_0a = e^{i pi (d^2-1) a / 6} det F", 1e-9);
    Check parseval(s, "Parseval sums agree and do not depend on (r, a)", 1e-12);
    Check roundtrip(s, "inverse(forward(x)) = x", 1e-12);

    const Rational rs[] = {Rational(0), kHalf, Rational(1), Rational(2, 3)};
    for (int d = 2; d <= opts.d_max; d++) {
        ComplexMatrix f00 = fra_matrix({d, Rational(0), 0}).to_complex();
        PhaseMatrix f00_exact = fra_matrix({d, Rational(0), 0});
        for (Rational r : rs) {
            for (int a = 0; a < d; a++) {
                QdftParams p{d, r, a};
                PhaseMatrix f = fra_matrix(p);
                ComplexMatrix fc = f.to_complex();
                unitary.residual(unitarity_residual(fc));
                auto h = is_generalized_hadamard(fc);
                hadamard.residual(std::max(h.unitarity_residual, h.modulus_residual));
                factor.exact(exact_multiply(dra_matrix(p), f00_exact) == f);
                PhaseMatrix hm = hra_matrix(p);
                bool row_ok = true;
                for (int n = 0; n < d; n++) {
                    for (int m = 0; m < d; m++) {
                        row_ok = row_ok && hm.at(n, m) == f.at(d - 1 - n, m);
                    }
                }
                rows.exact(row_ok);
                if (r != Rational(2, 3)) {
                    trace.residual(std::abs(trace_fra(p) - fc.trace()));
                }
            }
        }
        for (Rational r : {Rational(0), Rational(1)}) {
            for (int a = 0; a < d; a++) {
                PhaseMatrix f = fra_matrix({d, r, a});
                bool ok = true;
                Rational base = Rational(d - 1) * (r + Rational(a)) / Rational(2);
                for (int alpha = 0; alpha < d; alpha++) {
                    ExactPhase c = ExactPhase::root_of_unity(d, base - Rational(alpha)) *
                                   ExactPhase::half_turns(-Rational(d - 1) * r);
                    ok = ok && f.at(d - 1, alpha) == *f.at(0, alpha) * c;
                    for (int n = 1; n < d; n++) {
                        ExactPhase cn = ExactPhase::root_of_unity(d, base - Rational(alpha) + Rational(n * a));
                        ok = ok && f.at(n - 1, alpha) == *f.at(n, alpha) * cn;
                    }
                    if (r == Rational(0)) {
                        for (int n = 0; n < d; n++) {
                            ExactPhase cn = ExactPhase::root_of_unity(d, base - Rational(alpha) + Rational(n * a));
                            ok = ok && f.at((n + d - 1) % d, alpha) == *f.at(n, alpha) * cn;
                        }
                    }
                }
                sym.exact(ok);
            }
        }
        if (d <= 16) {
            ComplexMatrix f2 = f00 * f00;
            f4.residual(max_abs_diff(f2 * f2, ComplexMatrix::Identity(d, d)));
        }
        if (d == 6) {
            trace6.residual(std::abs(trace_fra({6, Rational(0), 2}) - std::sqrt(6.0)));
            trace6.residual(std::abs(fra_matrix({6, Rational(0), 2}).to_complex().trace() - std::sqrt(6.0)));
        }
        if (d <= 10) {
            for (int a = 0; a < d; a++) {
                Complex direct = determinant(fra_matrix({d, Rational(0), a}).to_complex());
                det.residual(std::abs(det_fra(d, a) - direct));
            }
        }
        for (int t = 0; t < 5; t++) {
            ComplexVector x = random_vector(rng, d), x2 = random_vector(rng, d);
            QdftParams p1{d, Rational(0), 0}, p2{d, Rational(uniform(rng, 0, 3), 3), uniform(rng, 0, d - 1)};
            auto s1 = parseval_check(x, x2, p1);
            auto s2 = parseval_check(x, x2, p2);
            double scale = std::max(1.0, std::abs(s1.original));
            parseval.residual(std::abs(s1.transformed - s1.original) / scale);
            parseval.residual(std::abs(s2.transformed - s2.original) / scale);
            parseval.residual(std::abs(s1.transformed - s2.transformed) / scale);
            roundtrip.residual((inverse(forward(x, p2), p2) - x).cwiseAbs().maxCoeff() / x.cwiseAbs().maxCoeff());
        }
    }
    return {unitary.done(), hadamard.done(), sym.done(), factor.done(), rows.done(), f4.done(),
            trace.done(), trace6.done(), det.done(), parseval.done(), roundtrip.done()};
}

// ---------------------------------------------------------------- su2

Out su2_suite(const VerifyOptions &opts) {
    const std::string s = "su2";
    Check nil(s, "quon nilpotency (x+)^k = (x-)^k = 0", 0);
    Check qcomm(s, "quon q-commutators [x-, x+]_q = [y-, y+]_q = I", 1e-13);
    Check number(s, "[N, x+] = x+, [N, x-] = -x-", 1e-13);
    Check oracle(s, "restricted quonic v_ra equals direct V_ra", 1e-12);
    Check table_sub(s, "quonic v_ra equals its action table on the j subspace", 1e-12);
    Check table_full(s, "quonic v_ra equals its action table on the full space (a = 0)", 1e-12);
    Check vpow(s, "(v_ra)^k = e^{i pi (k-1)(r+a)} I on the tensor space", 1e-10);
    Check closure(s, "[jz, j+] = j+, [jz, j-] = -j-, [j+, j-] = 2 jz", 1e-10);
    Check cas(s, "Casimir equals j(j+1) I", 1e-10);
    Check jz(s, "jz |j, m> = m |j, m>", 1e-10);
    Check eig(s, "v_ra |j alpha; r a> = q^{j(r+a) - alpha} |j alpha; r a>", 1e-12);
    Check ortho(s, "eigenbasis orthonormal", 1e-12);
    Check pseudo(s, "P v_ra P^dag = q^{-p} v_ra", 0);
    Check overlap(s, "closed-form overlap equals direct inner product", 1e-10);

    int k_oracle = std::min(opts.d_max, 8);
    for (int k = 2; k <= k_oracle; k++) {
        QuonRep q = quon_rep(k);
        ComplexMatrix xp = ComplexMatrix::Identity(k, k), xm = xp;
        for (int i = 0; i < k; i++) {
            xp = xp * q.x_plus;
            xm = xm * q.x_minus;
        }
        nil.exact(xp.isZero(0) && xm.isZero(0));
        Complex qq = q.q.to_complex();
        ComplexMatrix id = ComplexMatrix::Identity(k, k);
        qcomm.residual(max_abs_diff(q.x_minus * q.x_plus - qq * q.x_plus * q.x_minus, id));
        qcomm.residual(max_abs_diff(q.y_minus * q.y_plus - qq * q.y_plus * q.y_minus, id));
        number.residual(max_abs_diff(commutator(q.n_x, q.x_plus), q.x_plus));
        number.residual(max_abs_diff(commutator(q.n_x, q.x_minus), -q.x_minus));
        number.residual(max_abs_diff(commutator(q.n_y, q.y_plus), q.y_plus));
        number.residual(max_abs_diff(commutator(q.n_y, q.y_minus), -q.y_minus));

        HalfInteger j = HalfInteger::from_twice(k - 1);
        for (Rational r : {Rational(0), Rational(1), Rational(1, 3)}) {
            for (int a = 0; a < k; a++) {
                ComplexMatrix vq = build_vra_quonic(k, r, a);
                ComplexMatrix table = vra_action_table(k, r, a);
                oracle.residual(max_abs_diff(restrict_to_j(vq, j), vra_matrix(k, r, a).to_complex()));
                table_sub.residual(max_abs_diff(restrict_to_j(vq, j), restrict_to_j(table, j)));
                if (a == 0) {
                    table_full.residual(max_abs_diff(vq, table));
                }
                ComplexMatrix pw = ComplexMatrix::Identity(k * k, k * k);
                for (int i = 0; i < k; i++) {
                    pw = pw * vq;
                }
                Complex expect = ExactPhase::half_turns(Rational(k - 1) * (r + Rational(a))).to_complex();
                vpow.residual(max_abs_diff(pw, expect * ComplexMatrix::Identity(k * k, k * k)));

                PhaseMatrix vexact = vra_matrix(k, r, a);
                ComplexMatrix vc = vexact.to_complex();
                PhaseMatrix basis = eigenbasis_exact(j, r, a);
                ComplexMatrix bc = basis.to_complex();
                for (int alpha = 0; alpha < k; alpha++) {
                    ComplexVector col = bc.col(alpha);
                    Complex lam = eigenvalue(j, r, a, alpha).to_complex();
                    eig.residual((vc * col - lam * col).cwiseAbs().maxCoeff());
                }
                ortho.residual(unitarity_residual(bc));
                for (int p = 0; p < k; p++) {
                    PhaseMatrix rot = rotation_operator(j, p);
                    pseudo.exact(exact_multiply(exact_multiply(rot, vexact), rot.adjoint()) ==
                                 vexact.scaled(q_pow(k, -p)));
                }
            }
        }
    }

    int k_closure = std::min(opts.d_max, 12);
    for (int k = 2; k <= k_closure; k++) {
        HalfInteger j = HalfInteger::from_twice(k - 1);
        ComplexMatrix id = ComplexMatrix::Identity(k, k);
        ComplexMatrix m_diag = ComplexMatrix::Zero(k, k);
        for (int n = 0; n < k; n++) {
            m_diag(n, n) = (k - 1) / 2.0 - n;
        }
        for (Rational r : {Rational(0), kHalf}) {
            for (int a = 0; a < k; a++) {
                Su2Triple t = su2_generators(j, r, a);
                closure.residual(max_abs_diff(commutator(t.j_z, t.j_plus), t.j_plus));
                closure.residual(max_abs_diff(commutator(t.j_z, t.j_minus), -t.j_minus));
                closure.residual(max_abs_diff(commutator(t.j_plus, t.j_minus), 2.0 * t.j_z));
                double jj = (k - 1) / 2.0;
                cas.residual(max_abs_diff(casimir(t), jj * (jj + 1) * id));
                jz.residual(max_abs_diff(t.j_z, m_diag));
            }
        }
    }

    int k_overlap = std::min(opts.d_max, 7);
    const Rational grid[] = {Rational(0), kHalf, Rational(1)};
    for (int k = 2; k <= k_overlap; k++) {
        HalfInteger j = HalfInteger::from_twice(k - 1);
        for (int a = 0; a < k; a++) {
            for (Rational r : grid) {
                ComplexMatrix br = eigenbasis_exact(j, r, a).to_complex();
                for (Rational sp : grid) {
                    ComplexMatrix bs = eigenbasis_exact(j, sp, a).to_complex();
                    ComplexMatrix g = br.adjoint() * bs;
                    for (int alpha = 0; alpha < k; alpha++) {
                        for (int beta = 0; beta < k; beta++) {
                            overlap.residual(std::abs(overlap_same_a(j, r, sp, a, alpha, beta) - g(alpha, beta)));
                        }
                    }
                }
            }
        }
    }
    return {nil.done(),  qcomm.done(), number.done(), oracle.done(), table_sub.done(),
            table_full.done(), vpow.done(), closure.done(), cas.done(), jz.done(),
            eig.done(),  ortho.done(), pseudo.done(), overlap.done()};
}

// ---------------------------------------------------------------- mub

Out mub_suite(const VerifyOptions &opts) {
    auto rng = rng_for(opts, 4);
    const std::string s = "mub";
    Check complete(s, "prime d: p + 1 bases, all pairs unbiased", 1e-10);
    Check ortho(s, "every basis orthonormal", 1e-12);
    Check gauss(s, "Gauss-sum inner product equals direct inner product", 1e-10);
    Check gauss_mod(s, "Gauss-sum inner product has modulus 1/sqrt(p)", 1e-10);
    Check hadamard(s, "F_ra^dag F_rb is a generalized Hadamard matrix (prime d)", 1e-10);
    Check three(s, "composite d: B_0a, B_0(a+1), B_d are three MUBs", 1e-10);
    Check dim4(s, "d = 4 five-basis set unbiased", 1e-12);
    Check dim4_exact(s, "d = 4 W vectors are exact eighth-root phases", 0);
    Check ent(s, "entanglement determinant within [0, d^{-d/2}]", 1e-12);
    Check classes(s, "commuting classes: sizes, commutation, eigenvectors", 1e-10);
    Check partition(s, "sl(p) partition check", 0);

    for (int d = 2; d <= opts.d_max; d++) {
        if (is_prime(d)) {
            for (Rational r : {Rational(0), Rational(1), kHalf}) {
                MubSet set = mub_prime(d, r);
                complete.exact((int)set.bases.size() == d + 1);
                complete.residual(max_pairwise_deviation(set));
                for (const auto &b : set.bases) {
                    ortho.residual(unitarity_residual(b.vectors));
                }
            }
            for (int t = 0; t < 500; t++) {
                Rational r = std::vector<Rational>{Rational(0), Rational(1), kHalf}[t % 3];
                int a = uniform(rng, 0, d - 1);
                int b = (a + uniform(rng, 1, d - 1)) % d;
                int alpha = uniform(rng, 0, d - 1), beta = uniform(rng, 0, d - 1);
                Complex g = gauss_inner_product(d, r, a, alpha, b, beta);
                ComplexVector u = hra_matrix({d, r, a}).column(alpha);
                ComplexVector v = hra_matrix({d, r, b}).column(beta);
                gauss.residual(std::abs(g - u.dot(v)));
                gauss_mod.residual(std::abs(std::abs(g) - 1 / std::sqrt((double)d)));
            }
            for (int a = 0; a < d; a++) {
                for (int b = 0; b < d; b++) {
                    if (a != b) {
                        auto ph = product_hadamard(d, Rational(0), a, b);
                        hadamard.residual(std::max(ph.report.unitarity_residual, ph.report.modulus_residual));
                    }
                }
            }
            auto cls = commuting_classes(d);
            classes.exact((int)cls.size() == d + 1);
            for (const auto &c : cls) {
                classes.exact((int)c.members.size() == d - 1);
            }
            for (int a = 0; a < d; a++) {
                const auto &c = cls[a + 1];
                bool has_v = false;
                PhaseMatrix v0a = vra_matrix(d, Rational(0), a);
                ComplexMatrix basis = hra_matrix({d, Rational(0), a}).to_complex();
                for (const auto &m : c.members) {
                    PhaseMatrix u = u_ab(d, m);
                    has_v = has_v || u == v0a;
                    ComplexMatrix uc = u.to_complex();
                    for (int alpha = 0; alpha < d; alpha++) {
                        ComplexVector col = basis.col(alpha);
                        ComplexVector img = uc * col;
                        Complex lam = col.dot(img);
                        classes.residual((img - lam * col).cwiseAbs().maxCoeff());
                    }
                }
                classes.exact(has_v);
            }
            partition.exact(sl_partition_check(d).ok());
        } else {
            for (int a = 0; a < d; a++) {
                MubSet set = three_mub(d, a);
                three.residual(max_pairwise_deviation(set));
            }
        }
        if (d == 4) {
            MubSet set = mub_dim4();
            dim4.exact(set.bases.size() == 5);
            dim4.residual(max_pairwise_deviation(set));
            for (const auto &b : set.bases) {
                dim4_exact.exact(b.exact.has_value());
            }
        }
    }
    for (int d : {2, 3}) {
        double bound = std::pow((double)d, -d / 2.0);
        for (int t = 0; t < 1000; t++) {
            ComplexVector v = random_vector(rng, d * d);
            v.normalize();
            double e = entanglement_det(v, d);
            ent.residual(std::max({0.0, e - bound, -e}));
        }
    }
    return {complete.done(), ortho.done(), gauss.done(), gauss_mod.done(), hadamard.done(), three.done(),
            dim4.done(),     dim4_exact.done(), ent.done(), classes.done(), partition.done()};
}

// ---------------------------------------------------------------- wigner

Out wigner_suite(const VerifyOptions &opts) {
    const std::string s = "wigner";
    Check orth(s, "3-jm orthogonality", 1e-10);
    Check parity(s, "f-bar column permutation parity", 1e-10);
    Check conj(s, "f-bar conjugation: conj(f) = (-1)^J prod q_k^{-alpha_k} f", 1e-10);
    Check unit(s, "alpha-scheme coupling coefficients form a unitary matrix", 1e-10);
    Check change(s, "basis-change array unitary", 1e-12);

    int tj_orth = std::min(6, opts.d_max - 1);
    int tj_fbar = std::min(4, opts.d_max - 1);

    for (int a = 0; a <= tj_orth; a++) {
        for (int b = 0; b <= tj_orth; b++) {
            auto j1 = HalfInteger::from_twice(a), j2 = HalfInteger::from_twice(b);
            for (int c = std::abs(a - b); c <= a + b && c <= tj_orth; c += 2) {
                for (int c2 = std::abs(a - b); c2 <= a + b && c2 <= tj_orth; c2 += 2) {
                    auto j3 = HalfInteger::from_twice(c), j3b = HalfInteger::from_twice(c2);
                    for (int m3 = -c; m3 <= c; m3 += 2) {
                        for (int m3b = -c2; m3b <= c2; m3b += 2) {
                            double sum = 0;
                            for (int m1 = -a; m1 <= a; m1 += 2) {
                                for (int m2 = -b; m2 <= b; m2 += 2) {
                                    auto hm1 = HalfInteger::from_twice(m1), hm2 = HalfInteger::from_twice(m2);
                                    sum += (c + 1) * wigner_3jm({j1, j2, j3}, hm1, hm2, HalfInteger::from_twice(m3)) *
                                           wigner_3jm({j1, j2, j3b}, hm1, hm2, HalfInteger::from_twice(m3b));
                                }
                            }
                            double expect = (c == c2 && m3 == m3b) ? 1 : 0;
                            orth.residual(std::abs(sum - expect));
                        }
                    }
                }
            }
        }
    }

    for (int a = 0; a <= tj_fbar; a++) {
        for (int b = 0; b <= tj_fbar; b++) {
            for (int c = 0; c <= tj_fbar; c++) {
                HalfInteger js[3] = {HalfInteger::from_twice(a), HalfInteger::from_twice(b), HalfInteger::from_twice(c)};
                if (!triangle(js[0], js[1], js[2])) {
                    continue;
                }
                int big_j = (a + b + c) / 2;
                double sign = big_j % 2 == 0 ? 1 : -1;
                for (int x = 0; x <= a; x++) {
                    for (int y = 0; y <= b; y++) {
                        for (int z = 0; z <= c; z++) {
                            int al[3] = {x, y, z};
                            Complex f = fbar({js[0], js[1], js[2]}, x, y, z);
                            int perm[3] = {0, 1, 2};
                            do {
                                int inversions = (perm[0] > perm[1]) + (perm[0] > perm[2]) + (perm[1] > perm[2]);
                                Complex fp = fbar({js[perm[0]], js[perm[1]], js[perm[2]]}, al[perm[0]], al[perm[1]],
                                                  al[perm[2]]);
                                double factor = inversions % 2 == 0 ? 1 : sign;
                                parity.residual(std::abs(fp - factor * f));
                            } while (std::next_permutation(perm, perm + 3));
                            ExactPhase w = ExactPhase::from_fraction(-x, a + 1) * ExactPhase::from_fraction(-y, b + 1) *
                                           ExactPhase::from_fraction(-z, c + 1);
                            conj.residual(std::abs(std::conj(f) - sign * w.to_complex() * f));
                        }
                    }
                }
            }
        }
    }

    for (int a = 0; a <= tj_fbar; a++) {
        for (int b = 0; b <= tj_fbar; b++) {
            auto j1 = HalfInteger::from_twice(a), j2 = HalfInteger::from_twice(b);
            int n = (a + 1) * (b + 1);
            ComplexMatrix u(n, n);
            int col = 0;
            for (int c = std::abs(a - b); c <= a + b; c += 2) {
                auto j3 = HalfInteger::from_twice(c);
                for (int z = 0; z <= c; z++) {
                    for (int x = 0; x <= a; x++) {
                        for (int y = 0; y <= b; y++) {
                            u(x * (b + 1) + y, col) = cg_alpha(j1, j2, x, y, j3, z);
                        }
                    }
                    col++;
                }
            }
            unit.residual(unitarity_residual(u));
        }
    }
    for (int a = 0; a <= std::min(opts.d_max - 1, 8); a++) {
        auto j = HalfInteger::from_twice(a);
        ComplexMatrix u(a + 1, a + 1);
        for (int n = 0; n <= a; n++) {
            for (int al = 0; al <= a; al++) {
                u(n, al) = basis_change_coeff(j, HalfInteger::from_twice(a - 2 * n), al);
            }
        }
        change.residual(unitarity_residual(u));
    }
    return {orth.done(), parity.done(), conj.done(), unit.done(), change.done()};
}

using SuiteFn = std::function<Out(const VerifyOptions &)>;

const std::vector<std::pair<std::string, SuiteFn>> &suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"weyl", weyl_suite}, {"qdft", qdft_suite}, {"su2", su2_suite}, {"mub", mub_suite}, {"wigner", wigner_suite}};
    return table;
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n{"all"};
        for (const auto &[name, fn] : suites()) {
            n.push_back(name);
        }
        return n;
    }();
    return names;
}

bool is_suite_name(const std::string &name) {
    const auto &n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<InvariantResult> run_verify(const std::string &suite, const VerifyOptions &opts) {
    if (!is_suite_name(suite)) {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    if (opts.d_max < 2) {
        throw std::invalid_argument("d-max must be at least 2");
    }
    Out out;
    for (const auto &[name, fn] : suites()) {
        if (suite == "all" || suite == name) {
            Out part = fn(opts);
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    return out;
}

}  // namespace qmub
