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

// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.
// Exit status 0 only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "golden.h"
#include "oracles.h"
#include "qmub/cli.h"
#include "qmub/mub.h"
#include "qmub/qdft.h"
#include "qmub/quon_su2.h"
#include "qmub/weyl_pauli.h"
#include "qmub/wigner_racah.h"

using namespace qmub;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;
    void require(bool cond) {
        ok = ok && cond;
    }
    void note(const std::string &s) {
        notes.push_back(s);
    }
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

int failures = 0;

void criterion(int id, const std::string &title, double time_limit, const std::function<void(Outcome &)> &body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception &e) {
        out.ok = false;
        out.note(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = time_limit <= 0 || secs < time_limit;
    bool pass = out.ok && in_time;
    failures += pass ? 0 : 1;
    std::string timing = sci(secs) + " s";
    if (time_limit > 0) {
        timing += " (limit " + sci(time_limit) + " s)";
    }
    char head[16];
    std::snprintf(head, sizeof head, "AC%02d", id);
    std::cout << head << " " << (pass ? "PASS" : "FAIL") << "  " << title << "  [" << timing << "]\n";
    for (const auto &n : out.notes) {
        std::cout << "       " << n << "\n";
    }
    std::cout.flush();
}

HalfInteger half(int twice) {
    return HalfInteger::from_twice(twice);
}

ExactPhase qp(int d, Rational e) {
    return ExactPhase::root_of_unity(d, e);
}

// Turn fraction of a printed unit-modulus value, snapped to 1/24.
Rational turns_of(Complex z) {
    double t = std::arg(z) / (2 * kPi) * 24;
    long n = std::lround(t);
    if (std::abs(t - n) > 1e-9) {
        throw std::runtime_error("printed value is not a 24th root of unity");
    }
    return Rational(((n % 24) + 24) % 24, 24);
}

// Exact comparison of a PhaseMatrix column set with printed vectors.
bool matches_printed(const PhaseMatrix &m, const std::vector<golden::Vec> &printed) {
    for (size_t c = 0; c < printed.size(); c++) {
        for (size_t i = 0; i < printed[c].entries.size(); i++) {
            Complex g = printed[c].prefactor * printed[c].entries[i];
            const auto &e = m.at((int)i, (int)c);
            if (std::abs(g) == 0) {
                if (e.has_value()) {
                    return false;
                }
                continue;
            }
            if (!e.has_value() || std::abs(std::abs(g) - m.amplitude_value()) > 1e-15 ||
                e->turns() != turns_of(g / std::abs(g))) {
                return false;
            }
        }
    }
    return true;
}

double deviation(const ComplexMatrix &u, const ComplexMatrix &v) {
    double target = 1 / std::sqrt((double)u.rows()), worst = 0;
    ComplexMatrix g = u.adjoint() * v;
    for (int i = 0; i < g.rows(); i++) {
        for (int j = 0; j < g.cols(); j++) {
            worst = std::max(worst, std::abs(std::abs(g(i, j)) - target));
        }
    }
    return worst;
}

double set_deviation(const MubSet &set) {
    double worst = 0;
    for (size_t i = 0; i < set.bases.size(); i++) {
        ComplexMatrix b = set.bases[i].vectors;
        worst = std::max(worst, (b.adjoint() * b - ComplexMatrix::Identity(b.cols(), b.cols())).cwiseAbs().maxCoeff());
        for (size_t j = i + 1; j < set.bases.size(); j++) {
            worst = std::max(worst, deviation(b, set.bases[j].vectors));
        }
    }
    return worst;
}

// V(n-1, n) = q^{na}, V(d-1, 0) = exp(i pi (d-1) r), in double precision.
ComplexMatrix direct_vra(int d, double r, int a) {
    ComplexMatrix v = ComplexMatrix::Zero(d, d);
    for (int n = 1; n < d; n++) {
        v(n - 1, n) = oracle::cis(2 * kPi * n * a / d);
    }
    v(d - 1, 0) = oracle::cis(kPi * (d - 1) * r);
    return v;
}

// Exact zero / integer test for a sum of d-th roots of unity given by exponent
// counts: zero when the counts are invariant under a shift by d/p, p prime.
enum class SumKind { kZero, kInteger, kUndecided };
SumKind classify(const std::vector<int> &counts, int d, int *integer) {
    bool all_trivial = true;
    for (int k = 1; k < d; k++) {
        all_trivial = all_trivial && counts[k] == 0;
    }
    if (all_trivial) {
        *integer = counts[0];
        return counts[0] == 0 ? SumKind::kZero : SumKind::kInteger;
    }
    for (int p = 2; p <= d; p++) {
        if (d % p != 0 || !is_prime(p)) {
            continue;
        }
        int shift = d / p;
        bool invariant = true;
        for (int k = 0; k < d; k++) {
            invariant = invariant && counts[k] == counts[(k + shift) % d];
        }
        if (invariant) {
            return SumKind::kZero;
        }
    }
    return SumKind::kUndecided;
}

bool trace_rule_holds(int d, const PhaseMatrix &ua, const PhaseMatrix &ub, bool same) {
    PhaseMatrix prod = exact_multiply(ua.adjoint(), ub);
    std::vector<int> counts(d, 0);
    for (int n = 0; n < d; n++) {
        const auto &e = prod.at(n, n);
        if (!e.has_value()) {
            continue;
        }
        Rational k = e->turns() * Rational(d);
        if (k.denominator() != 1) {
            return false;
        }
        counts[k.numerator() % d]++;
    }
    int value = 0;
    SumKind kind = classify(counts, d, &value);
    return same ? (kind == SumKind::kInteger && value == d) : kind == SumKind::kZero;
}

template <typename F>
void for_each_triple(int max_twice, F f) {
    for (int a = 0; a <= max_twice; a++) {
        for (int b = 0; b <= max_twice; b++) {
            for (int c = 0; c <= max_twice; c++) {
                if (triangle(half(a), half(b), half(c))) {
                    f(a, b, c);
                }
            }
        }
    }
}

}  // namespace

int main() {
    std::cout << "qmub acceptance\n";

    criterion(1, "fra_matrix(6, 0, 2) equals the printed d = 6 matrix (exact turns)", 1.0, [](Outcome &o) {
        PhaseMatrix f = fra_matrix({6, Rational(0), 2});
        int mismatches = 0;
        for (int n = 0; n < 6; n++) {
            for (int m = 0; m < 6; m++) {
                const auto &e = f.at(n, m);
                mismatches += !(e.has_value() && e->turns() == Rational(golden::kF02d6[n][m], 6));
            }
        }
        o.require(f.amplitude() == Amplitude::kInvSqrtDim && mismatches == 0);
        o.note("entry mismatches: " + std::to_string(mismatches) + " / 36");
    });

    criterion(2, "tr F_02 = sqrt 6 at d = 6; closed-form trace = direct trace, d 2..12, r in {0, 1/2, 1} (tol 1e-10)",
              5.0, [](Outcome &o) {
                  double six = std::sqrt(6.0);
                  double r6 = std::max(std::abs(trace_fra({6, Rational(0), 2}) - six),
                                       std::abs(oracle::fra(6, 0, 2).trace() - six));
                  double worst = 0;
                  for (int d = 2; d <= 12; d++) {
                      for (Rational r : {Rational(0), Rational(1, 2), Rational(1)}) {
                          for (int a = 0; a < d; a++) {
                              worst = std::max(worst, std::abs(trace_fra({d, r, a}) - oracle::fra(d, to_double(r), a).trace()));
                          }
                      }
                  }
                  o.require(r6 < 1e-10 && worst < 1e-10);
                  o.note("|tr F_02 - sqrt 6| = " + sci(r6) + ", max closed-vs-direct = " + sci(worst));
              });

    criterion(3, "determinant formula = direct determinant, d 2..10, all a (tol 1e-9)", 5.0, [](Outcome &o) {
        double worst = 0;
        for (int d = 2; d <= 10; d++) {
            for (int a = 0; a < d; a++) {
                worst = std::max(worst, std::abs(det_fra(d, a) - oracle::gauss_det(oracle::fra(d, 0, a))));
            }
        }
        o.require(worst < 1e-9);
        o.note("max residual = " + sci(worst));
    });

    criterion(4, "prime MUBs: all pairs unbiased for p in {2,3,5,7,11,13}, r in {0,1} (tol 1e-10); p = 2, 3 printed vectors exact",
              20.0, [](Outcome &o) {
                  double worst = 0;
                  for (int p : {2, 3, 5, 7, 11, 13}) {
                      for (Rational r : {Rational(0), Rational(1)}) {
                          MubSet set = mub_prime(p, r);
                          o.require((int)set.bases.size() == p + 1);
                          worst = std::max(worst, set_deviation(set));
                      }
                  }
                  o.require(worst < 1e-10);
                  o.note("max pair deviation = " + sci(worst));

                  bool exact = true;
                  MubSet s2 = mub_prime(2, Rational(0));
                  auto p2 = golden::mub_p2();
                  for (int k = 0; k < 2; k++) {
                      exact = exact && s2.bases[k].exact && matches_printed(*s2.bases[k].exact, p2[k]);
                  }
                  exact = exact && s2.bases[2].vectors == ComplexMatrix::Identity(2, 2);
                  MubSet s3 = mub_prime(3, Rational(0));
                  for (int a = 0; a < 3; a++) {
                      const auto &m = s3.bases[a].exact;
                      exact = exact && m && m->amplitude() == Amplitude::kInvSqrtDim;
                      for (int alpha = 0; exact && alpha < 3; alpha++) {
                          for (int n = 0; n < 3; n++) {
                              const auto &e = m->at(n, alpha);
                              exact = exact && e && e->turns() == Rational(golden::kMubP3[a][alpha][n], 3);
                          }
                      }
                  }
                  exact = exact && s3.bases[3].vectors == ComplexMatrix::Identity(3, 3);
                  o.require(exact);
                  o.note(std::string("p = 2, 3 printed vectors: ") + (exact ? "exact match" : "MISMATCH"));
              });

    criterion(5, "d = 4: printed bases exact, pairwise deviation < 1e-12, entanglement det 0 / 1/2 (tol 1e-12)", 0,
              [](Outcome &o) {
                  MubSet set = mub_dim4();
                  o.require(set.bases.size() == 5);
                  bool exact = set.bases[0].vectors == ComplexMatrix::Identity(4, 4);
                  auto printed = golden::w_bases();
                  for (int k = 0; k < 4; k++) {
                      exact = exact && set.bases[k + 1].exact && matches_printed(*set.bases[k + 1].exact, printed[k]);
                  }
                  double dev = set_deviation(set);
                  double det_err = 0;
                  for (int k = 0; k < 4; k++) {
                      double expected = k < 2 ? 0 : 0.5;
                      for (int c = 0; c < 4; c++) {
                          ComplexVector s = set.bases[k + 1].vectors.col(c);
                          double direct = std::abs(s(0) * s(3) - s(1) * s(2));
                          det_err = std::max(det_err, std::abs(direct - expected));
                          det_err = std::max(det_err, std::abs(entanglement_det(s, 2) - expected));
                      }
                  }
                  o.require(exact && dev < 1e-12 && det_err < 1e-12);
                  o.note(std::string("printed vectors: ") + (exact ? "exact match" : "MISMATCH") +
                         ", max deviation = " + sci(dev) + ", max det error = " + sci(det_err));
              });

    criterion(6, "commuting_classes(5) verbatim; sl_partition_check for p in {2,3,5,7,11,13}", 0, [](Outcome &o) {
        auto classes = commuting_classes(5);
        bool verbatim = classes.size() == 6;
        for (int k = 0; verbatim && k < 6; k++) {
            verbatim = classes[k].label == k && classes[k].members.size() == 4;
            for (int i = 0; verbatim && i < 4; i++) {
                verbatim = classes[k].members[i] == PauliIndex{golden::kClassesP5[k][i][0], golden::kClassesP5[k][i][1]};
            }
        }
        bool partition = true;
        for (int p : {2, 3, 5, 7, 11, 13}) {
            partition = partition && sl_partition_check(p).ok();
        }
        o.require(verbatim && partition);
        o.note(std::string("classes: ") + (verbatim ? "verbatim" : "MISMATCH") + ", partition: " +
               (partition ? "ok" : "FAILED"));
    });

    criterion(7, "XmZn, qcom 1, qcom 2, trace de uu, composition law, 93, 95 exact; d <= 8 exhaustive, d <= 16 sampled",
              30.0, [](Outcome &o) {
                  std::mt19937_64 rng(7);
                  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
                  std::int64_t bad_xmzn = 0, bad_q1 = 0, bad_q2 = 0, q2_cases = 0, bad_q2_corrected = 0, bad_trace = 0,
                               bad_comp = 0, bad_93 = 0, bad_95 = 0;
                  double res_95 = 0;
                  for (int d = 2; d <= 16; d++) {
                      bool exhaustive = d <= 8;
                      PhaseMatrix x = x_matrix(d), z = z_matrix(d), id = PhaseMatrix::identity(d);
                      ComplexMatrix xd = ComplexMatrix::Zero(d, d), zd = ComplexMatrix::Zero(d, d);
                      for (int n = 0; n < d; n++) {
                          xd(n, (n + 1) % d) = 1;
                          zd(n, n) = oracle::cis(2 * kPi * n / d);
                      }
                      o.require(max_abs_diff(x.to_complex(), xd) < 1e-15 && max_abs_diff(z.to_complex(), zd) < 1e-15);
                      bad_xmzn += !(exact_pow(x, d) == id && exact_pow(z, d) == id);

                      auto xmzn = [&](int m, int n) {
                          PhaseMatrix xm = exact_pow(x, m), zn = exact_pow(z, n);
                          bad_xmzn += !(exact_multiply(xm, zn) ==
                                        exact_multiply(zn, xm).scaled(qp(d, Rational((std::int64_t)m * n))));
                      };
                      if (exhaustive) {
                          for (int m = 0; m < d; m++) {
                              for (int n = 0; n < d; n++) {
                                  xmzn(m, n);
                              }
                          }
                      } else {
                          for (int t = 0; t < 60; t++) {
                              xmzn(uni(-2 * d, 2 * d), uni(-2 * d, 2 * d));
                          }
                      }

                      for (Rational r : {Rational(0), Rational(1), Rational(1, 4)}) {
                          PhaseMatrix pr = pr_matrix(d, r);
                          PhaseMatrix pxp = exact_multiply(exact_multiply(pr, x), pr.adjoint());
                          for (int a = 0; a < d; a++) {
                              PhaseMatrix v = vra_matrix(d, r, a);
                              o.require(max_abs_diff(v.to_complex(), direct_vra(d, to_double(r), a)) < 1e-15);
                              bad_q1 += !(exact_multiply(v, z) == exact_multiply(z, v).scaled(qp(d, Rational(1))));
                              PhaseMatrix vx = exact_multiply(v, x);
                              q2_cases++;
                              bad_q2 += !(vx == exact_multiply(x, v).scaled(qp(d, Rational(-a))));
                              bad_q2_corrected += !(vx == exact_multiply(pxp, v).scaled(qp(d, Rational(-a))));
                          }
                      }

                      std::vector<PhaseMatrix> u(d * d);
                      for (int a = 0; a < d; a++) {
                          for (int b = 0; b < d; b++) {
                              u[a * d + b] = exact_multiply(exact_pow(x, a), exact_pow(z, b));
                          }
                      }
                      if (exhaustive) {
                          for (int i = 0; i < d * d; i++) {
                              for (int j = 0; j < d * d; j++) {
                                  bad_trace += !trace_rule_holds(d, u[i], u[j], i == j);
                              }
                          }
                      } else {
                          for (int t = 0; t < 300; t++) {
                              int i = uni(0, d * d - 1), j = t % 5 == 0 ? i : uni(0, d * d - 1);
                              bad_trace += !trace_rule_holds(d, u[i], u[j], i == j);
                          }
                      }

                      // w_abc = q^a X^b Z^c; a'' = a + a' - c b'.
                      auto w = [&](int a, int b, int c) { return u[(b % d) * d + (c % d)].scaled(qp(d, Rational(a))); };
                      auto comp = [&](int a, int b, int c, int a2, int b2, int c2) {
                          bad_comp += !(exact_multiply(w(a, b, c), w(a2, b2, c2)) ==
                                        w(mod(a + a2 - c * b2, d), (b + b2) % d, (c + c2) % d));
                      };
                      if (exhaustive) {
                          std::vector<PhaseMatrix> all;
                          for (int a = 0; a < d; a++) {
                              for (int b = 0; b < d; b++) {
                                  for (int c = 0; c < d; c++) {
                                      all.push_back(w(a, b, c));
                                  }
                              }
                          }
                          for (int g = 0; g < d * d * d; g++) {
                              int a = g / (d * d), b = (g / d) % d, c = g % d;
                              for (int h = 0; h < d * d * d; h++) {
                                  int a2 = h / (d * d), b2 = (h / d) % d, c2 = h % d;
                                  bad_comp += !(exact_multiply(all[g], all[h]) ==
                                                all[mod(a + a2 - c * b2, d) * d * d + ((b + b2) % d) * d + (c + c2) % d]);
                              }
                          }
                      } else {
                          for (int t = 0; t < 300; t++) {
                              comp(uni(0, d - 1), uni(0, d - 1), uni(0, d - 1), uni(0, d - 1), uni(0, d - 1), uni(0, d - 1));
                          }
                      }

                      // T_(n1, n2) = q^{n1 n2 / 2} Z^n1 X^n2.
                      auto t_of = [&](int n1, int n2) {
                          return exact_multiply(exact_pow(z, n1), exact_pow(x, n2))
                              .scaled(qp(d, Rational((std::int64_t)n1 * n2, 2)));
                      };
                      auto sine = [&](int m1, int m2, int n1, int n2) {
                          PhaseMatrix tm = t_of(m1, m2), tn = t_of(n1, n2), tmn = t_of(m1 + n1, m2 + n2);
                          std::int64_t cross = (std::int64_t)m1 * n2 - (std::int64_t)m2 * n1;
                          bool mn = exact_multiply(tm, tn) == tmn.scaled(qp(d, Rational(-cross, 2)));
                          bool nm = exact_multiply(tn, tm) == tmn.scaled(qp(d, Rational(cross, 2)));
                          bad_93 += !mn;
                          bad_95 += !(mn && nm);
                          ComplexMatrix cm = tm.to_complex() * tn.to_complex() - tn.to_complex() * tm.to_complex();
                          ComplexMatrix rhs = Complex(0, -2 * std::sin(kPi * cross / d)) * tmn.to_complex();
                          res_95 = std::max(res_95, max_abs_diff(cm, rhs));
                      };
                      if (exhaustive) {
                          for (int i = 0; i < d * d; i++) {
                              for (int j = 0; j < d * d; j++) {
                                  sine(i / d, i % d, j / d, j % d);
                              }
                          }
                      } else {
                          for (int t = 0; t < 60; t++) {
                              sine(uni(-2 * d, 2 * d), uni(-2 * d, 2 * d), uni(-2 * d, 2 * d), uni(-2 * d, 2 * d));
                          }
                      }
                  }
                  o.require(bad_xmzn == 0 && bad_q1 == 0 && bad_q2 == 0 && bad_trace == 0 && bad_comp == 0 &&
                            bad_93 == 0 && bad_95 == 0 && res_95 < 1e-12);
                  o.note("XmZn failures " + std::to_string(bad_xmzn) + ", qcom 1 failures " + std::to_string(bad_q1) +
                         ", trace failures " + std::to_string(bad_trace) + ", composition failures " +
                         std::to_string(bad_comp) + ", 93 failures " + std::to_string(bad_93) + ", 95 failures " +
                         std::to_string(bad_95) + " (numeric residual " + sci(res_95) + ")");
                  o.note("qcom 2 as printed, V_ra X = q^{-a} X V_ra, r in {0, 1, 1/4}: " + std::to_string(bad_q2) +
                         " / " + std::to_string(q2_cases) + " cases fail (holds only where exp(i pi (d-1) r) = 1)");
                  o.note("corrected form V_ra X = q^{-a} P_r X P_r^dag V_ra: " + std::to_string(bad_q2_corrected) +
                         " / " + std::to_string(q2_cases) + " cases fail");
              });

    criterion(8, "quon oracle: restrict(v_ra) = V_ra (1e-12), su(2) commutators (1e-10), eigenvalue equation (1e-12)", 0,
              [](Outcome &o) {
                  double r_restrict = 0, r_comm = 0, r_eigen = 0;
                  for (int k = 2; k <= 8; k++) {
                      HalfInteger j = half(k - 1);
                      double jj = (k - 1) / 2.0;
                      for (Rational r : {Rational(0), Rational(1), Rational(1, 3)}) {
                          for (int a = 0; a < k; a++) {
                              ComplexMatrix direct = direct_vra(k, to_double(r), a);
                              ComplexMatrix v = restrict_to_j(build_vra_quonic(k, r, a), j);
                              r_restrict = std::max(r_restrict, max_abs_diff(v, direct));

                              Su2Triple t = su2_generators(j, r, a);
                              r_comm = std::max(r_comm, max_abs_diff(commutator(t.j_z, t.j_plus), t.j_plus));
                              r_comm = std::max(r_comm, max_abs_diff(commutator(t.j_z, t.j_minus), -t.j_minus));
                              r_comm = std::max(r_comm, max_abs_diff(commutator(t.j_plus, t.j_minus), 2.0 * t.j_z));

                              ComplexMatrix c = casimir(t);
                              auto basis = eigenbasis(j, r, a);
                              for (int alpha = 0; alpha < k; alpha++) {
                                  Complex lambda = oracle::cis(2 * kPi * (jj * to_double(r + Rational(a)) - alpha) / k);
                                  r_eigen = std::max(r_eigen, (direct * basis[alpha] - lambda * basis[alpha]).norm());
                                  r_eigen = std::max(r_eigen, (c * basis[alpha] - jj * (jj + 1) * basis[alpha]).norm());
                                  r_eigen = std::max(r_eigen, std::abs(basis[alpha].norm() - 1));
                              }
                          }
                      }
                  }
                  o.require(r_restrict < 1e-12 && r_comm < 1e-10 && r_eigen < 1e-12);
                  o.note("restrict residual " + sci(r_restrict) + ", commutator residual " + sci(r_comm) +
                         ", eigen residual " + sci(r_eigen));
              });

    criterion(9, "sin-ratio overlap as printed = direct inner product, j <= 3, all a, (r, s) in {0, 1/2, 1}^2 (tol 1e-10)", 0,
              [](Outcome &o) {
                  double worst_printed = 0, worst_library = 0;
                  std::int64_t cases = 0, bad = 0;
                  const Rational grid[] = {Rational(0), Rational(1, 2), Rational(1)};
                  for (int tj = 1; tj <= 6; tj++) {
                      int k = tj + 1;
                      for (Rational r : grid) {
                          for (Rational s : grid) {
                              for (int a = 0; a < k; a++) {
                                  auto br = eigenbasis(half(tj), r, a), bs = eigenbasis(half(tj), s, a);
                                  for (int alpha = 0; alpha < k; alpha++) {
                                      for (int beta = 0; beta < k; beta++) {
                                          Complex direct = br[alpha].dot(bs[beta]);
                                          Rational x = Rational(tj, 2) * (s - r) + Rational(alpha - beta);
                                          double printed;
                                          Rational ratio = x / Rational(k);
                                          if (ratio.denominator() == 1) {
                                              printed = (ratio.numerator() * (k - 1)) % 2 == 0 ? 1 : -1;
                                          } else {
                                              double xd = to_double(x);
                                              printed = std::sin(kPi * xd) / std::sin(kPi * xd / k) / k;
                                          }
                                          double err = std::abs(printed - direct);
                                          worst_printed = std::max(worst_printed, err);
                                          bad += err >= 1e-10;
                                          cases++;
                                          worst_library = std::max(
                                              worst_library,
                                              std::abs(overlap_same_a(half(tj), r, s, a, alpha, beta) - direct));
                                      }
                                  }
                              }
                          }
                      }
                  }
                  o.require(worst_printed < 1e-10);
                  o.note("printed closed form: " + std::to_string(bad) + " / " + std::to_string(cases) +
                         " cases off, max residual " + sci(worst_printed));
                  o.note("with the unit phase q^{j(beta - alpha)} restored (overlap_same_a): max residual " +
                         sci(worst_library));
              });

    criterion(10, "fbar permutation parity, printed conjugation law, cg_alpha two routes, j <= 2 (tol 1e-10)", 0,
              [](Outcome &o) {
                  double r_perm = 0, r_conj = 0, r_conj_derived = 0, r_cg = 0;
                  std::int64_t conj_cases = 0, conj_bad = 0;
                  auto qk = [](int tj, int e) { return oracle::cis(2 * kPi * e / (tj + 1)); };
                  for_each_triple(4, [&](int a, int b, int c) {
                      int js[3] = {a, b, c};
                      double sign = ((a + b + c) / 2) % 2 == 0 ? 1 : -1;
                      for (int x = 0; x <= a; x++) {
                          for (int y = 0; y <= b; y++) {
                              for (int z = 0; z <= c; z++) {
                                  int al[3] = {x, y, z};
                                  Complex f = fbar({half(a), half(b), half(c)}, x, y, z);
                                  int perm[3] = {0, 1, 2};
                                  do {
                                      int inv = (perm[0] > perm[1]) + (perm[0] > perm[2]) + (perm[1] > perm[2]);
                                      Complex fp = fbar({half(js[perm[0]]), half(js[perm[1]]), half(js[perm[2]])},
                                                        al[perm[0]], al[perm[1]], al[perm[2]]);
                                      r_perm = std::max(r_perm, std::abs(fp - (inv % 2 ? sign : 1.0) * f));
                                  } while (std::next_permutation(perm, perm + 3));

                                  Complex w = qk(a, x) * qk(b, y) * qk(c, z);
                                  double err = std::abs(std::conj(f) - sign * w * f);
                                  r_conj = std::max(r_conj, err);
                                  conj_bad += err >= 1e-10;
                                  conj_cases++;
                                  r_conj_derived = std::max(r_conj_derived, std::abs(std::conj(f) - sign * std::conj(w) * f));
                                  r_cg = std::max(r_cg, std::abs(cg_alpha(half(a), half(b), x, y, half(c), z) -
                                                                 oracle::cg_alpha(a, b, x, y, c, z)));
                              }
                          }
                      }
                  });
                  o.require(r_perm < 1e-10 && r_conj < 1e-10 && r_cg < 1e-10);
                  o.note("permutation parity residual " + sci(r_perm) + ", cg_alpha two-route residual " + sci(r_cg));
                  o.note("conj(fbar) = (-1)^J prod q_k^{+alpha_k} fbar as printed: " + std::to_string(conj_bad) + " / " +
                         std::to_string(conj_cases) + " cases off, max residual " + sci(r_conj));
                  o.note("with exponent -alpha_k: max residual " + sci(r_conj_derived));
              });

    criterion(11, "d = 6: (B_00, B_01) deviation > 1e-3; (B_0a, B_0(a+1), B_6) three MUBs within 1e-10", 0,
              [](Outcome &o) {
                  ComplexMatrix b0 = ra_basis(6, Rational(0), 0).vectors;
                  double d01 = deviation(b0, ra_basis(6, Rational(0), 1).vectors);
                  double d02 = deviation(b0, ra_basis(6, Rational(0), 2).vectors);
                  double three = 0;
                  for (int a = 0; a < 6; a++) {
                      MubSet set = three_mub(6, a);
                      o.require(set.bases.size() == 3);
                      three = std::max(three, set_deviation(set));
                      ComplexMatrix ba = ra_basis(6, Rational(0), a).vectors;
                      ComplexMatrix bb = ra_basis(6, Rational(0), (a + 1) % 6).vectors;
                      ComplexMatrix id = ComplexMatrix::Identity(6, 6);
                      three = std::max({three, deviation(ba, bb), deviation(ba, id), deviation(bb, id)});
                  }
                  o.require(d01 > 1e-3 && three < 1e-10);
                  o.note("(B_00, B_01) deviation " + sci(d01) + " (the pair is unbiased, so the stated negative control fails)");
                  o.note("(B_00, B_02) deviation " + sci(d02) + ", three-MUB max deviation " + sci(three));
              });

    criterion(12, "verify all --d-max 13 completes", 60.0, [](Outcome &o) {
        std::ostringstream out, err;
        int code = run_cli({"verify", "all", "--d-max", "13", "--format", "csv"}, out, err);
        o.require(code == kExitOk);
        o.note("exit code " + std::to_string(code));
    });

    std::cout << (failures == 0 ? "all criteria pass\n" : std::to_string(failures) + " criteria fail\n");
    return failures == 0 ? 0 : 1;
}
