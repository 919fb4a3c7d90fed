// Copyright 2026 The imkit Authors
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


#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "imkit/decompositions.hpp"
#include "imkit/measures.hpp"
#include "imkit/sdp.hpp"
#include "imkit/version.hpp"

namespace imkit::cli {

int exit_code(ErrorCategory c) noexcept {
    switch (c) {
    case ErrorCategory::parse: return kParseFailure;
    case ErrorCategory::solver:
    case ErrorCategory::convergence: return kSolverFailure;
    case ErrorCategory::invariant:
    case ErrorCategory::dimension:
    case ErrorCategory::domain: return kInvariantFailure;
    }
    return kInvariantFailure;
}

Input load_input(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return input_from_text(path, ss.str());
}

Input input_from_text(std::string name, std::string text) {
    MatrixFile f = parse_matrix_file(text, name);
    return {std::move(name), std::move(text), std::move(f)};
}

namespace {

Report start(const std::string &command, const std::vector<const Input *> &inputs, const Options &opt) {
    Report r;
    r.command = command;
    std::vector<std::string> texts;
    for (const Input *in : inputs) texts.push_back(in->text);
    r.inputs_digest = digest(texts);
    r.provenance = {kVersion,       opt.tol, opt.solver.gap_tol, opt.solver.max_iter, kAlphaTolerance,
                    kCovarianceTolerance};
    return r;
}

Report finish(Report r) {
    r.require_finite();
    return r;
}

PureState require_pure_source(const Input &in, const Options &opt, const char *mode) {
    if (auto psi = as_pure(in.file, opt.tol)) return *psi;
    throw InvariantError(std::string("mode ") + mode + " requires a pure source state; " + in.name +
                         " is mixed (the analytic conversion formulas hold for pure sources only)");
}

// Evaluates y(x) on an evenly spaced grid and checks that y does not increase.
Table curve(const std::string &name, const std::string &x_name, const std::string &y_name, std::size_t points,
            double x_lo, double x_hi, double slack, const std::function<double(double)> &y) {
    Table t{name, {x_name, y_name}, {}};
    for (std::size_t k = 0; k < points; ++k) {
        const double x = points == 1 ? x_hi : x_lo + (x_hi - x_lo) * static_cast<double>(k) / (points - 1);
        t.rows.push_back({x, y(x)});
    }
    for (std::size_t k = 1; k < t.rows.size(); ++k) {
        if (t.rows[k][1] > t.rows[k - 1][1] + slack) {
            throw InvariantError(name + " is not monotone between " + x_name + " = " + std::to_string(t.rows[k - 1][0]) +
                                 " and " + std::to_string(t.rows[k][0]));
        }
    }
    return t;
}

void require_solved(SolverStatus s, int iterations) {
    if (s == SolverStatus::optimal || s == SolverStatus::near_optimal) return;
    throw SolverError(std::string("SDP solver stopped with status ") + to_string(s) + " after " +
                      std::to_string(iterations) + " iterations");
}

void add_params(Report &r, const ApproxParams &p) {
    r.add("alpha", p.alpha);
    r.add("beta", p.beta);
    r.add("k", p.k);
    r.add("m1", p.m1);
}

} // namespace

Report cmd_measure(const Input &state, const Options &opt) {
    Report r = start("measure", {&state}, opt);
    const DensityMatrix rho = as_density(state.file, opt.tol);
    r.add("kind", std::string(to_string(state.file.kind)));
    r.add("dimension", static_cast<double>(rho.dim()));
    r.add("geometric_imaginarity", geometric_imaginarity(rho));
    r.add("real", is_real(rho));
    if (state.file.kind == FileKind::bipartite) {
        const BipartiteState s = as_bipartite(state.file, opt.tol);
        for (Side side : {Side::A, Side::B}) {
            const std::string tag = side == Side::A ? "_A" : "_B";
            r.add("entanglement_monotone" + tag, real_entanglement_monotone(s, side));
            try {
                r.add("entanglement_infidelity" + tag, real_entanglement_infidelity(s, side));
            } catch (const InvariantError &) {
                r.add("entanglement_infidelity" + tag, std::string("undefined (partial transpose is not a state)"));
            }
        }
    }
    return finish(std::move(r));
}

Report cmd_convert(const Input &source, const Input &target, ConvertMode mode, double value, const Options &opt) {
    Report r = start("convert", {&source, &target}, opt);
    const std::size_t n = opt.curve_points;
    switch (mode) {
    case ConvertMode::exact: {
        const PureState psi = require_pure_source(source, opt, "exact");
        const DensityMatrix rho = as_density(target.file, opt.tol);
        r.add("mode", std::string("exact"));
        r.add("source_imaginarity", geometric_imaginarity(psi));
        r.add("target_imaginarity", geometric_imaginarity(rho));
        r.add("probability", prob_exact(psi, rho));
        break;
    }
    case ConvertMode::prob_at_fidelity: {
        const PureState psi = require_pure_source(source, opt, "prob-at-fidelity");
        const DensityMatrix rho = as_density(target.file, opt.tol);
        const ConversionResult c = approx_prob(psi, rho, value);
        r.add("mode", std::string("prob-at-fidelity"));
        r.add("fidelity", value);
        r.add("probability", c.probability);
        add_params(r, c.params);
        if (n > 0) {
            r.tables.push_back(curve("probability_vs_fidelity", "f", "probability", n, 0.0, 1.0, 1e-12,
                                     [&](double f) { return approx_prob(psi, rho, f).probability; }));
        }
        break;
    }
    case ConvertMode::fidelity_at_prob: {
        const PureState psi = require_pure_source(source, opt, "fidelity-at-prob");
        const DensityMatrix rho = as_density(target.file, opt.tol);
        const ConversionResult c = approx_fidelity(psi, rho, value);
        r.add("mode", std::string("fidelity-at-prob"));
        r.add("probability", value);
        r.add("fidelity", c.fidelity);
        add_params(r, c.params);
        if (n > 0) {
            r.tables.push_back(curve("fidelity_vs_probability", "p", "fidelity", n, 1.0 / n, 1.0, 1e-12,
                                     [&](double p) { return approx_fidelity(psi, rho, p).fidelity; }));
        }
        break;
    }
    case ConvertMode::feasible: {
        const DensityMatrix rho = as_density(source.file, opt.tol);
        const DensityMatrix sigma = as_density(target.file, opt.tol);
        const FeasibilityReport f = feasibility_alpha(rho, sigma, opt.solver);
        require_solved(f.solver_status, f.iterations);
        r.add("mode", std::string("feasible"));
        r.add("alpha", f.alpha);
        r.add("feasible", f.feasible);
        r.add("solver_status", std::string(to_string(f.solver_status)));
        r.add("iterations", static_cast<double>(f.iterations));
        r.matrices.push_back({"Z", f.z_cert});
        r.matrices.push_back({"X1", f.x1_cert});
        r.matrices.push_back({"X2", f.x2_cert});
        break;
    }
    case ConvertMode::sdp_fidelity: {
        const DensityMatrix rho = as_density(source.file, opt.tol);
        if (target.file.kind != FileKind::pure) {
            throw InvariantError("mode sdp-fidelity requires a pure target state; " + target.name + " is a " +
                                 to_string(target.file.kind) + " file");
        }
        const PureState psi = *as_pure(target.file, opt.tol);
        const SdpSolution s = optimal_fidelity_pure_target(rho, psi, value, opt.solver);
        require_solved(s.solver_status, s.iterations);
        r.add("mode", std::string("sdp-fidelity"));
        r.add("probability", value);
        r.add("fidelity", s.objective);
        r.add("solver_status", std::string(to_string(s.solver_status)));
        r.add("iterations", static_cast<double>(s.iterations));
        if (auto src = as_pure(source.file, opt.tol)) {
            r.add("closed_form_fidelity", approx_fidelity(*src, DensityMatrix::from_pure(psi), value).fidelity);
        }
        if (n > 0) {
            const double slack = 1e3 * opt.solver.gap_tol;
            r.tables.push_back(curve("fidelity_vs_probability", "p", "fidelity", n, 1.0 / n, 1.0, slack, [&](double p) {
                const SdpSolution point = optimal_fidelity_pure_target(rho, psi, p, opt.solver);
                require_solved(point.solver_status, point.iterations);
                return point.objective;
            }));
        }
        break;
    }
    }
    return finish(std::move(r));
}

Report cmd_decompose(const Input &state, DecomposeKind kind, const Options &opt) {
    Report r = start("decompose", {&state}, opt);
    const DensityMatrix rho = as_density(state.file, opt.tol);
    Ensemble e;
    RealVector diag;
    if (kind == DecomposeKind::conjugate_orthogonal) {
        ConjugateOrthogonalEnsemble co = conjugate_orthogonal_decomposition(rho);
        e = std::move(co.ensemble);
        diag = co.diag;
        r.add("kind", std::string("conjugate-orthogonal"));
    } else {
        e = equal_imaginarity_decomposition(rho);
        r.add("kind", std::string("equal-imaginarity"));
    }
    const bool with_d = diag.size() == static_cast<Index>(e.size());
    r.add("members", static_cast<double>(e.size()));
    r.add("geometric_imaginarity", geometric_imaginarity(rho));
    r.add("average_imaginarity", e.average_imaginarity());
    r.add("reconstruction_error", max_abs_diff(e.mixture(), rho.matrix()));
    if (with_d) r.add("sum_D", diag.sum());

    Table members{"members", {"index", "weight", "imaginarity"}, {}};
    if (with_d) members.columns.push_back("D");
    ComplexMatrix amps(rho.dim(), static_cast<Index>(e.size()));
    for (std::size_t k = 0; k < e.size(); ++k) {
        const EnsembleMember &m = e.members[k];
        std::vector<double> row{static_cast<double>(k), m.weight, geometric_imaginarity(m.state)};
        if (with_d) row.push_back(diag(static_cast<Index>(k)));
        members.rows.push_back(std::move(row));
        amps.col(static_cast<Index>(k)) = m.state.amplitudes();
    }
    r.tables.push_back(std::move(members));
    r.matrices.push_back({"amplitudes", amps});
    return finish(std::move(r));
}

Report cmd_kraus(const std::vector<Input> &kraus, KrausAction action, const Options &opt) {
    const std::size_t needed = action == KrausAction::merge ? 2 : 1;
    if (kraus.size() != needed) {
        throw DimensionError("this action takes " + std::to_string(needed) + " Kraus file(s), got " +
                             std::to_string(kraus.size()));
    }
    std::vector<const Input *> ptrs;
    for (const Input &in : kraus) ptrs.push_back(&in);
    Report r = start("kraus", ptrs, opt);
    const KrausSet k = as_kraus(kraus.front().file, opt.tol);
    r.add("operators", static_cast<double>(k.ops().size()));
    r.add("d_in", static_cast<double>(k.d_in()));
    r.add("d_out", static_cast<double>(k.d_out()));
    r.add("trace_preserving", k.trace_preserving());

    const auto action_difference = [](const KrausSet &a, const KrausSet &b) {
        double worst = 0.0;
        for (Index i = 0; i < a.d_in(); ++i)
            for (Index j = 0; j < a.d_in(); ++j) {
                ComplexMatrix e = ComplexMatrix::Zero(a.d_in(), a.d_in());
                e(i, j) = 1.0;
                worst = std::max(worst, max_abs_diff(a.apply(e), b.apply(e)));
            }
        return worst;
    };
    const auto largest_imag = [](const KrausSet &s) {
        double worst = 0.0;
        for (const auto &op : s.ops()) worst = std::max(worst, max_imag(op));
        return worst;
    };

    switch (action) {
    case KrausAction::check_real:
        r.add("action", std::string("check-real"));
        r.add("is_real", k.is_real());
        r.add("max_imag", largest_imag(k));
        break;
    case KrausAction::check_covariant: {
        const double res = covariance_residual(k);
        r.add("action", std::string("check-covariant"));
        r.add("covariant", res <= kCovarianceTolerance);
        r.add("covariance_residual", res);
        break;
    }
    case KrausAction::realify: {
        const KrausSet real = realify_covariant(k);
        r.add("action", std::string("realify"));
        r.add("covariance_residual", covariance_residual(k));
        r.add("output_operators", static_cast<double>(real.ops().size()));
        r.add("output_max_imag", largest_imag(real));
        r.add("action_difference", action_difference(k, real));
        r.artifact = from_kraus(real);
        break;
    }
    case KrausAction::merge: {
        const KrausSet other = as_kraus(kraus.back().file, opt.tol);
        const KrausSet merged = merge_cp_maps(k, other);
        r.add("action", std::string("merge"));
        r.add("output_operators", static_cast<double>(merged.ops().size()));
        r.add("output_trace_preserving", merged.trace_preserving());
        r.add("output_max_imag", largest_imag(merged));
        r.artifact = from_kraus(merged);
        break;
    }
    }
    return finish(std::move(r));
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"imkit: imaginarity measures, decompositions and state conversion under real operations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    double tol = -1.0;
    std::string output;
    Format format = Format::text;
    const std::map<std::string, Format> formats{
        {"text", Format::text}, {"csv", Format::csv}, {"structured", Format::structured}};

    const auto common = [&](CLI::App *sub) {
        sub->add_option("--tol", tol, "Tolerance for input validation")->check(CLI::PositiveNumber);
        sub->add_option("--output", output, "Write the report to this path");
        sub->add_option("--format", format, "Report format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    std::string state_path;
    CLI::App *measure = app.add_subcommand("measure", "Geometric imaginarity and real-entanglement monotones");
    measure->add_option("state", state_path, "State file")->required();
    common(measure);

    std::string source_path;
    std::string target_path;
    ConvertMode mode = ConvertMode::exact;
    double value = std::nan("");
    std::size_t curve_points = kDefaultCurvePoints;
    const std::map<std::string, ConvertMode> modes{{"exact", ConvertMode::exact},
                                                   {"prob-at-fidelity", ConvertMode::prob_at_fidelity},
                                                   {"fidelity-at-prob", ConvertMode::fidelity_at_prob},
                                                   {"feasible", ConvertMode::feasible},
                                                   {"sdp-fidelity", ConvertMode::sdp_fidelity}};
    CLI::App *convert = app.add_subcommand("convert", "State conversion under real operations");
    convert->add_option("source", source_path, "Source state file")->required();
    convert->add_option("target", target_path, "Target state file")->required();
    convert->add_option("--mode", mode, "exact, prob-at-fidelity, fidelity-at-prob, feasible or sdp-fidelity")
        ->required()
        ->transform(CLI::CheckedTransformer(modes));
    convert->add_option("--value", value, "Fidelity f or success probability p, depending on the mode");
    convert->add_option("--curve", curve_points, "Points in the trade-off curve (0 disables)")
        ->capture_default_str();
    common(convert);

    DecomposeKind kind = DecomposeKind::conjugate_orthogonal;
    const std::map<std::string, DecomposeKind> kinds{{"conjugate-orthogonal", DecomposeKind::conjugate_orthogonal},
                                                     {"equal-imaginarity", DecomposeKind::equal_imaginarity}};
    CLI::App *decompose = app.add_subcommand("decompose", "Pure-state ensembles of a density matrix");
    decompose->add_option("state", state_path, "State file")->required();
    decompose->add_option("--kind", kind, "conjugate-orthogonal or equal-imaginarity")
        ->required()
        ->transform(CLI::CheckedTransformer(kinds));
    common(decompose);

    std::vector<std::string> kraus_paths;
    std::string kraus_out;
    KrausAction kaction = KrausAction::check_real;
    const std::map<std::string, KrausAction> actions{{"check-real", KrausAction::check_real},
                                                     {"check-covariant", KrausAction::check_covariant},
                                                     {"realify", KrausAction::realify},
                                                     {"merge", KrausAction::merge}};
    CLI::App *kraus = app.add_subcommand("kraus", "Checks and transformations of Kraus sets");
    kraus->add_option("files", kraus_paths, "Kraus file(s); merge takes two")->required()->expected(1, 2);
    kraus->add_option("--action", kaction, "check-real, check-covariant, realify or merge")
        ->required()
        ->transform(CLI::CheckedTransformer(actions));
    kraus->add_option("--kraus-out", kraus_out, "Write the resulting Kraus set to this path");
    common(kraus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseFailure;
    }

    try {
        Options opt;
        if (tol > 0.0) opt.tol = Tolerances::uniform(tol);
        opt.curve_points = curve_points;

        Report report;
        if (*measure) {
            report = cmd_measure(load_input(state_path), opt);
        } else if (*convert) {
            const bool needs_value = mode == ConvertMode::prob_at_fidelity || mode == ConvertMode::fidelity_at_prob ||
                                     mode == ConvertMode::sdp_fidelity;
            if (needs_value && std::isnan(value)) throw DomainError("this mode needs --value");
            report = cmd_convert(load_input(source_path), load_input(target_path), mode, value, opt);
        } else if (*decompose) {
            report = cmd_decompose(load_input(state_path), kind, opt);
        } else {
            std::vector<Input> inputs;
            for (const auto &p : kraus_paths) inputs.push_back(load_input(p));
            report = cmd_kraus(inputs, kaction, opt);
        }

        if (report.artifact && !kraus_out.empty()) {
            std::ofstream f(kraus_out, std::ios::binary);
            if (!f) throw ParseError("cannot write file", kraus_out);
            f << serialize(*report.artifact);
        }
        const std::string text = render(report, format);
        if (output.empty()) {
            out << text;
        } else {
            std::ofstream f(output, std::ios::binary);
            if (!f) throw ParseError("cannot write file", output);
            f << text;
        }
        return kOk;
    } catch (const Error &e) {
        err << "error [" << to_string(e.category()) << "]: " << e.what() << "\n";
        return exit_code(e.category());
    }
}

} // namespace imkit::cli
