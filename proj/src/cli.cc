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

#include "qmub/cli.h"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qmub/mub.h"
#include "qmub/qdft.h"
#include "qmub/serialize.h"
#include "qmub/verify.h"
#include "qmub/weyl_pauli.h"
#include "qmub/wigner_racah.h"

namespace qmub {

namespace {

constexpr double kMubTolerance = 1e-10;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Either an exact rational or a float fallback.
struct RealArg {
    std::optional<Rational> exact;
    double value = 0;
};

RealArg parse_real(const std::string &flag, const std::string &text, std::ostream &err) {
    RealArg out;
    if (is_rational_literal(text)) {
        out.exact = parse_rational(text);
        out.value = to_double(*out.exact);
        return out;
    }
    size_t used = 0;
    try {
        out.value = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(out.value)) {
        throw UsageError("--" + flag + " expects p/q, an integer, or a decimal; got '" + text + "'");
    }
    err << "warning: --" << flag << " " << text << " is not a p/q literal; using the floating-point path\n";
    return out;
}

Rational require_exact(const std::string &flag, const RealArg &arg) {
    if (!arg.exact) {
        throw UsageError("--" + flag + " must be a rational literal (p/q or integer) for this command");
    }
    return *arg.exact;
}

std::vector<std::string> split_commas(const std::string &text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        out.push_back(cur);
    }
    return out;
}

struct Emitter {
    OutputFormat format;
    std::ostream &out;
    Json command;

    void json(const Json &payload) {
        OutputDocument doc;
        doc.command = command;
        doc.payload = payload;
        out << emit_json(doc);
    }
};

// ------------------------------------------------------------- matrix

struct MatrixArgs {
    std::string kind;
    int d = 2;
    std::string r = "0";
    int a = 0;
    int b = 0;
    int n1 = 0;
    int n2 = 0;
};

int cmd_matrix(const MatrixArgs &m, Emitter &em, std::ostream &err) {
    RealArg r = parse_real("r", m.r, err);
    std::optional<PhaseMatrix> exact;
    ComplexMatrix numeric;
    const bool uses_r = m.kind == "fra" || m.kind == "hra" || m.kind == "dra" || m.kind == "vra" || m.kind == "pr";
    if (!uses_r || r.exact) {
        Rational rr = r.exact.value_or(Rational(0));
        if (m.kind == "fra") {
            exact = fra_matrix({m.d, rr, m.a});
        } else if (m.kind == "hra") {
            exact = hra_matrix({m.d, rr, m.a});
        } else if (m.kind == "dra") {
            exact = dra_matrix({m.d, rr, m.a});
        } else if (m.kind == "vra") {
            exact = vra_matrix(m.d, rr, m.a);
        } else if (m.kind == "pr") {
            QdftParams{m.d, rr, 0}.validate();
            exact = pr_matrix(m.d, rr);
        } else if (m.kind == "x") {
            exact = x_matrix(m.d);
        } else if (m.kind == "z") {
            exact = z_matrix(m.d);
        } else if (m.kind == "uab") {
            QdftParams{m.d, Rational(0), m.a}.validate();
            QdftParams{m.d, Rational(0), m.b}.validate();
            exact = u_ab(m.d, {m.a, m.b});
        } else {
            QdftParams{m.d, Rational(0), 0}.validate();
            exact = t_matrix(m.d, {m.n1, m.n2});
        }
        numeric = exact->to_complex();
    } else {
        if (m.kind == "fra") {
            numeric = fra_matrix_real(m.d, r.value, m.a);
        } else if (m.kind == "hra") {
            numeric = hra_matrix_real(m.d, r.value, m.a);
        } else if (m.kind == "dra") {
            numeric = dra_matrix_real(m.d, r.value, m.a);
        } else {
            QdftParams{m.d, Rational(0), m.kind == "vra" ? m.a : 0}.validate();
            numeric = ComplexMatrix::Identity(m.d, m.d);
            Complex corner = std::polar(1.0, std::numbers::pi * (m.d - 1) * r.value);
            if (m.kind == "pr") {
                numeric(m.d - 1, m.d - 1) = corner;
            } else {
                numeric = vra_matrix(m.d, Rational(0), m.a).to_complex();
                numeric(m.d - 1, 0) = corner;
            }
        }
    }
    switch (em.format) {
        case OutputFormat::kJson:
            em.json(exact ? phase_matrix_to_json(*exact) : complex_matrix_to_json(numeric));
            break;
        case OutputFormat::kCsv:
            em.out << to_csv(numeric);
            break;
        case OutputFormat::kPretty:
            em.out << (exact ? pretty(*exact) : pretty(numeric));
            break;
    }
    return kExitOk;
}

// ------------------------------------------------------------- mub

struct MubArgs {
    int p = 0;
    std::string r = "0";
    bool verify = false;
    bool dim4 = false;
    bool three = false;
    int a = 0;
};

int cmd_mub(const MubArgs &m, Emitter &em, std::ostream &err) {
    MubSet set;
    if (m.dim4) {
        set = mub_dim4();
    } else {
        if (m.p == 0) {
            throw UsageError("mub needs --p (or --dim4)");
        }
        if (m.three) {
            set = three_mub(m.p, m.a);
        } else {
            if (!is_prime(m.p)) {
                throw UsageError("--p " + std::to_string(m.p) +
                                 " is not prime; a complete set exists here only for prime p. Use --three-mub for "
                                 "the three-basis construction in composite dimension, or --dim4 for d = 4");
            }
            set = mub_prime(m.p, require_exact("r", parse_real("r", m.r, err)));
        }
    }

    Json bases = Json::array();
    for (const auto &b : set.bases) {
        bases.push_back(Json{{"label", label_string(b.label)},
                             {"vectors", b.exact ? phase_matrix_to_json(*b.exact) : complex_matrix_to_json(b.vectors)}});
    }
    Json payload{{"type", "mub_set"}, {"dim", set.dim}, {"declared_complete", set.declared_complete}, {"bases", bases}};

    bool pass = true;
    Json table = Json::array();
    double worst = 0;
    if (m.verify) {
        for (size_t i = 0; i < set.bases.size(); i++) {
            for (size_t j = i + 1; j < set.bases.size(); j++) {
                double dev = unbiasedness(set.bases[i], set.bases[j]);
                worst = std::max(worst, dev);
                table.push_back(Json{{"i", i}, {"j", j}, {"deviation", dev}});
            }
        }
        pass = worst <= kMubTolerance;
        payload["verification"] =
            Json{{"pairs", table}, {"max_deviation", worst}, {"tolerance", kMubTolerance}, {"pass", pass}};
    }

    switch (em.format) {
        case OutputFormat::kJson:
            em.json(payload);
            break;
        case OutputFormat::kCsv:
            for (const auto &b : set.bases) {
                em.out << "# " << label_string(b.label) << "\n" << to_csv(b.vectors);
            }
            if (m.verify) {
                em.out << "# verification\ni,j,deviation\n";
                for (const auto &row : table) {
                    em.out << row["i"] << "," << row["j"] << "," << row["deviation"].get<double>() << "\n";
                }
            }
            break;
        case OutputFormat::kPretty:
            for (const auto &b : set.bases) {
                em.out << label_string(b.label) << " (columns are basis vectors)\n";
                em.out << (b.exact ? pretty(*b.exact) : pretty(b.vectors)) << "\n";
            }
            if (m.verify) {
                em.out << "max deviation " << std::scientific << std::setprecision(3) << worst << " (tolerance "
                       << kMubTolerance << "): " << (pass ? "PASS" : "FAIL") << "\n";
            }
            break;
    }
    return pass ? kExitOk : kExitVerificationFailed;
}

// ------------------------------------------------------------- verify

int cmd_verify(const std::string &suite, int d_max, std::uint64_t seed, Emitter &em) {
    if (!is_suite_name(suite)) {
        throw UsageError("unknown suite '" + suite + "'");
    }
    if (d_max < 2) {
        throw UsageError("--d-max must be at least 2");
    }
    auto results = run_verify(suite, {d_max, seed});
    bool pass = std::all_of(results.begin(), results.end(), [](const auto &r) { return r.pass(); });
    Json rows = Json::array();
    for (const auto &r : results) {
        rows.push_back(Json{{"suite", r.suite},
                            {"name", r.name},
                            {"cases", r.cases},
                            {"max_residual", r.max_residual},
                            {"tolerance", r.tolerance},
                            {"pass", r.pass()}});
    }
    switch (em.format) {
        case OutputFormat::kJson:
            em.json(Json{{"type", "verify_report"},
                         {"suite", suite},
                         {"d_max", d_max},
                         {"seed", seed},
                         {"results", rows},
                         {"pass", pass}});
            break;
        case OutputFormat::kCsv:
            em.out << "suite,name,cases,max_residual,tolerance,pass\n";
            for (const auto &r : results) {
                em.out << r.suite << ",\"" << r.name << "\"," << r.cases << "," << std::setprecision(6)
                       << r.max_residual << "," << r.tolerance << "," << (r.pass() ? "true" : "false") << "\n";
            }
            break;
        case OutputFormat::kPretty:
            for (const auto &r : results) {
                em.out << (r.pass() ? "PASS " : "FAIL ") << std::left << std::setw(7) << r.suite << std::right
                       << " residual " << std::scientific << std::setprecision(2) << r.max_residual << " (tol "
                       << r.tolerance << ", " << std::defaultfloat << r.cases << " cases)  " << r.name << "\n";
            }
            em.out << (pass ? "all invariants pass" : "some invariants FAILED") << "\n";
            break;
    }
    return pass ? kExitOk : kExitVerificationFailed;
}

// ------------------------------------------------------------- gauss

int cmd_gauss(std::int64_t u, const std::string &v_text, std::int64_t w, Emitter &em, std::ostream &err) {
    if (w == 0) {
        throw UsageError("--w must be nonzero");
    }
    RealArg v = parse_real("v", v_text, err);
    Complex s = v.exact ? gauss_sum(u, *v.exact, w) : gauss_sum(GaussSumArgs{u, v.value, w});
    switch (em.format) {
        case OutputFormat::kJson:
            em.json(Json{{"type", "complex"}, {"value", complex_to_json(s)}, {"modulus", std::abs(s)}});
            break;
        case OutputFormat::kCsv:
            em.out << "re,im\n" << std::setprecision(17) << s.real() << "," << s.imag() << "\n";
            break;
        case OutputFormat::kPretty:
            em.out << "S(" << u << ", " << v_text << ", " << w << ") = " << std::setprecision(12) << s.real()
                   << (s.imag() < 0 ? " - " : " + ") << std::abs(s.imag()) << "i  (|S| = " << std::abs(s) << ")\n";
            break;
    }
    return kExitOk;
}

// ------------------------------------------------------------- transform

int cmd_transform(int d, const std::string &r_text, int a, const std::string &path, bool inv, Emitter &em,
                  std::ostream &err) {
    RealArg r = parse_real("r", r_text, err);
    ComplexVector x;
    try {
        x = read_signal_file(path);
    } catch (const std::runtime_error &e) {
        throw UsageError(e.what());
    }
    if (x.size() != d) {
        throw UsageError("signal has " + std::to_string(x.size()) + " samples but --d is " + std::to_string(d));
    }
    ComplexMatrix f = r.exact ? fra_matrix({d, *r.exact, a}).to_complex() : fra_matrix_real(d, r.value, a);
    ComplexVector y = inv ? inverse(x, f) : forward(x, f);
    switch (em.format) {
        case OutputFormat::kJson:
            em.json(Json{{"type", "complex_vector"}, {"values", complex_vector_to_json(y)}});
            break;
        case OutputFormat::kCsv:
            em.out << "re,im\n" << std::setprecision(17);
            for (Eigen::Index i = 0; i < y.size(); i++) {
                em.out << y(i).real() << "," << y(i).imag() << "\n";
            }
            break;
        case OutputFormat::kPretty:
            em.out << pretty(ComplexMatrix(y));
            break;
    }
    return kExitOk;
}

// ------------------------------------------------------------- fbar

int cmd_fbar(const std::string &j_text, const std::string &alpha_text, Emitter &em) {
    auto js_s = split_commas(j_text);
    auto al_s = split_commas(alpha_text);
    if (js_s.size() != 3 || al_s.size() != 3) {
        throw UsageError("--j and --alpha take three comma-separated values");
    }
    HalfInteger js[3];
    int al[3];
    for (int i = 0; i < 3; i++) {
        try {
            js[i] = HalfInteger::parse(js_s[i]);
            size_t used = 0;
            al[i] = std::stoi(al_s[i], &used);
            if (used != al_s[i].size()) {
                throw std::invalid_argument("trailing text");
            }
        } catch (const std::exception &) {
            throw UsageError("malformed --j or --alpha value");
        }
        if (js[i].twice() < 0 || al[i] < 0 || al[i] > js[i].twice()) {
            throw UsageError("each alpha must lie in [0, 2j] and each j must be non-negative");
        }
    }
    Complex f = fbar({js[0], js[1], js[2]}, al[0], al[1], al[2]);
    double sign = ((js[0] + js[1] + js[2]).twice() / 2) % 2 == 0 ? 1 : -1;
    Json perms = Json::array();
    bool ok = true;
    int perm[3] = {0, 1, 2};
    do {
        int inversions = (perm[0] > perm[1]) + (perm[0] > perm[2]) + (perm[1] > perm[2]);
        double factor = inversions % 2 == 0 ? 1 : sign;
        Complex fp = fbar({js[perm[0]], js[perm[1]], js[perm[2]]}, al[perm[0]], al[perm[1]], al[perm[2]]);
        double res = std::abs(fp - factor * f);
        ok = ok && res <= 1e-10;
        perms.push_back(Json{{"order", {perm[0], perm[1], perm[2]}},
                             {"value", complex_to_json(fp)},
                             {"expected_factor", factor},
                             {"residual", res}});
    } while (std::next_permutation(perm, perm + 3));

    switch (em.format) {
        case OutputFormat::kJson:
            em.json(Json{{"type", "fbar"}, {"value", complex_to_json(f)}, {"permutations", perms}, {"parity_ok", ok}});
            break;
        case OutputFormat::kCsv:
            em.out << "order,re,im,expected_factor,residual\n" << std::setprecision(17);
            for (const auto &p : perms) {
                em.out << p["order"][0] << p["order"][1] << p["order"][2] << "," << p["value"][0].get<double>() << ","
                       << p["value"][1].get<double>() << "," << p["expected_factor"].get<double>() << ","
                       << p["residual"].get<double>() << "\n";
            }
            break;
        case OutputFormat::kPretty:
            em.out << std::setprecision(12) << "fbar = " << f.real() << (f.imag() < 0 ? " - " : " + ")
                   << std::abs(f.imag()) << "i\n";
            for (const auto &p : perms) {
                em.out << "  columns " << p["order"][0] << p["order"][1] << p["order"][2] << "  factor "
                       << std::showpos << p["expected_factor"].get<double>() << std::noshowpos << "  residual "
                       << std::scientific << std::setprecision(2) << p["residual"].get<double>() << std::defaultfloat
                       << std::setprecision(12) << "\n";
            }
            em.out << (ok ? "permutation parity holds" : "permutation parity FAILED") << "\n";
            break;
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

std::string default_format() {
    const char *env = std::getenv(kFormatEnvVar);
    return env && *env ? env : "json";
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quadratic DFT, Weyl-Pauli and mutually unbiased bases toolkit", "qmub"};
    app.require_subcommand(1);
    std::string format = default_format();
    app.add_option("--format", format, "json | csv | pretty (default from $QMUB_FORMAT, else json)")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.fallthrough();

    MatrixArgs margs;
    auto *matrix = app.add_subcommand("matrix", "Emit F_ra, H_ra, D_ra, V_ra, X, Z, P_r, u_ab or T_n");
    matrix->add_option("kind", margs.kind, "fra|hra|dra|vra|x|z|pr|uab|t")
        ->required()
        ->check(CLI::IsMember({"fra", "hra", "dra", "vra", "x", "z", "pr", "uab", "t"}));
    matrix->add_option("--d", margs.d, "dimension")->required();
    matrix->add_option("--r", margs.r, "p/q (exact) or decimal (floating point)");
    matrix->add_option("--a", margs.a, "a index (also X power for uab)");
    matrix->add_option("--b", margs.b, "Z power for uab");
    matrix->add_option("--n1", margs.n1, "first index for t");
    matrix->add_option("--n2", margs.n2, "second index for t");

    MubArgs mbargs;
    auto *mub = app.add_subcommand("mub", "Emit mutually unbiased bases");
    mub->add_option("--p", mbargs.p, "prime dimension (any d >= 2 with --three-mub)");
    mub->add_option("--r", mbargs.r, "p/q");
    mub->add_flag("--verify", mbargs.verify, "append the pairwise deviation table");
    mub->add_flag("--dim4", mbargs.dim4, "the five-basis d = 4 set");
    mub->add_flag("--three-mub", mbargs.three, "B_0a, B_0(a+1) and the computational basis");
    mub->add_option("--a", mbargs.a, "a for --three-mub");

    std::string suite;
    int d_max = 8;
    std::uint64_t seed = kDefaultSeed;
    auto *verify = app.add_subcommand("verify", "Run invariant suites");
    verify->add_option("suite", suite, "all|weyl|qdft|su2|mub|wigner")->required();
    verify->add_option("--d-max", d_max, "largest dimension");
    verify->add_option("--seed", seed, "randomness seed");

    std::int64_t gu = 0, gw = 1;
    std::string gv = "0";
    auto *gauss = app.add_subcommand("gauss", "Direct Gauss sum S(u, v, w)");
    gauss->add_option("--u", gu)->required();
    gauss->add_option("--v", gv, "p/q or decimal")->required();
    gauss->add_option("--w", gw)->required();

    int td = 2, ta = 0;
    std::string tr = "0", tin;
    bool tinv = false;
    auto *transform = app.add_subcommand("transform", "Apply the quadratic DFT to a signal");
    transform->add_option("--d", td)->required();
    transform->add_option("--r", tr, "p/q or decimal");
    transform->add_option("--a", ta);
    transform->add_option("--in", tin, "JSON [[re, im], ...] or CSV re,im lines")->required();
    transform->add_flag("--inverse", tinv, "apply the inverse transform");

    std::string fj, fa;
    auto *fb = app.add_subcommand("fbar", "f-bar symbol with its permutation-parity cross-check");
    fb->add_option("--j", fj, "j1,j2,j3 (e.g. 1,1/2,3/2)")->required();
    fb->add_option("--alpha", fa, "alpha1,alpha2,alpha3")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    Json echo_args = Json::object();
    CLI::App *sub = app.get_subcommands().front();
    for (const CLI::Option *opt : sub->get_options()) {
        if (opt->count() > 0 && !opt->get_name().empty() && opt->get_name() != "--help") {
            auto res = opt->results();
            echo_args[opt->get_name()] = res.size() == 1 ? Json(res[0]) : Json(res);
        }
    }
    Json command{{"name", sub->get_name()}, {"args", echo_args}};

    try {
        OutputFormat fmt = parse_format(format);
        Emitter em{fmt, out, command};
        if (sub == matrix) {
            return cmd_matrix(margs, em, err);
        }
        if (sub == mub) {
            return cmd_mub(mbargs, em, err);
        }
        if (sub == verify) {
            return cmd_verify(suite, d_max, seed, em);
        }
        if (sub == gauss) {
            return cmd_gauss(gu, gv, gw, em, err);
        }
        if (sub == transform) {
            return cmd_transform(td, tr, ta, tin, tinv, em, err);
        }
        return cmd_fbar(fj, fa, em);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace qmub
