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


#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "fixtures.hpp"
#include "imkit/random.hpp"
#include "matrix_file.hpp"
#include "oracles.hpp"
#include "report.hpp"

using namespace imkit;
using namespace imkit::cli;

namespace {

std::string data(const std::string &name) { return std::string(IMKIT_TEST_DATA_DIR) + "/" + name; }

double scalar(const Report &r, const std::string &name) {
    const Value *v = r.find(name);
    EXPECT_NE(v, nullptr) << name;
    return v ? std::get<double>(*v) : NAN;
}

bool flag(const Report &r, const std::string &name) {
    const Value *v = r.find(name);
    EXPECT_NE(v, nullptr) << name;
    return v ? std::get<bool>(*v) : false;
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "imkit");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const Options kOpt{};

} // namespace

TEST(MatrixFile, ParseSerializeParseIsIdentity) {
    for (const char *name : {"plus_i.json", "tilted.json", "real_mixed.json", "mixed_qubit.json", "eta.json",
                             "real_kraus.json", "covariant_kraus.json"}) {
        const MatrixFile f = read_matrix_file(data(name));
        const MatrixFile g = parse_matrix_file(serialize(f));
        EXPECT_TRUE(f == g) << name;
        EXPECT_EQ(serialize(g), serialize(f)) << name;
    }
}

TEST(MatrixFile, RandomContentRoundTripsExactly) {
    random::Rng rng(71);
    for (int k = 0; k < 20; ++k) {
        const MatrixFile f = from_density(random::density_matrix(2 + k % 4, rng));
        EXPECT_TRUE(parse_matrix_file(serialize(f)) == f);
        const MatrixFile g = from_kraus(random::channel(2, 3, 2, rng));
        EXPECT_TRUE(parse_matrix_file(serialize(g)) == g);
    }
}

TEST(MatrixFile, SyntaxErrorCarriesLineAndColumn) {
    try {
        read_matrix_file(data("malformed.json"));
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_NE(e.location().find("malformed.json:5:"), std::string::npos) << e.location();
    }
}

TEST(MatrixFile, FieldErrorCarriesPointer) {
    try {
        read_matrix_file(data("bad_entry.json"));
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_NE(e.location().find("/entries/1/1"), std::string::npos) << e.location();
    }
}

TEST(MatrixFile, RejectsStructuralProblems) {
    EXPECT_THROW(parse_matrix_file(R"({"kind":"mixed","dims":[1],"entries":[[[1,0]]]})"), ParseError);
    EXPECT_THROW(parse_matrix_file(R"({"kind":"pure","dims":[2,2],"entries":[]})"), ParseError);
    EXPECT_THROW(parse_matrix_file(R"({"kind":"pure","dims":[0],"entries":[]})"), ParseError);
    EXPECT_THROW(parse_matrix_file(R"({"kind":"pure","dims":[2],"entries":[[1,0]]})"), ParseError);
    EXPECT_THROW(parse_matrix_file(R"({"kind":"pure","dims":[1],"entries":[[1,0]],"extra":1})"), ParseError);
    EXPECT_THROW(parse_matrix_file(R"({"kind":"kraus_set","dims":[1,1],"entries":[]})"), ParseError);
    EXPECT_THROW(parse_matrix_file(R"([1, 2])"), ParseError);
    EXPECT_THROW(read_matrix_file(data("does_not_exist.json")), ParseError);
}

TEST(MatrixFile, InvariantsCheckedByTypedViews) {
    const MatrixFile f = read_matrix_file(data("not_hermitian.json"));
    EXPECT_THROW(as_density(f, {}), InvariantError);
    EXPECT_THROW(as_kraus(read_matrix_file(data("plus_i.json")), {}), DimensionError);
}

TEST(MatrixFile, RankOneDensityActsAsPure) {
    const MatrixFile f = from_density(DensityMatrix::from_pure(fixtures::plus_i()));
    ASSERT_TRUE(as_pure(f, {}).has_value());
    EXPECT_FALSE(as_pure(read_matrix_file(data("mixed_qubit.json")), {}).has_value());
}

TEST(Report, StructuredRenderingRoundTrips) {
    const Report r = cmd_decompose(load_input(data("mixed_qubit.json")), DecomposeKind::conjugate_orthogonal, kOpt);
    EXPECT_TRUE(parse_structured(render(r, Format::structured)) == r);

    const Report k = cmd_kraus({load_input(data("covariant_kraus.json"))}, KrausAction::realify, kOpt);
    ASSERT_TRUE(k.artifact.has_value());
    EXPECT_TRUE(parse_structured(render(k, Format::structured)) == k);

    const Report c = cmd_convert(load_input(data("tilted.json")), load_input(data("plus_i.json")),
                                 ConvertMode::prob_at_fidelity, 0.9, kOpt);
    EXPECT_TRUE(parse_structured(render(c, Format::structured)) == c);
}

TEST(Report, CsvCurveHasHeaderRow) {
    Options opt;
    opt.curve_points = 7;
    const Report c = cmd_convert(load_input(data("tilted.json")), load_input(data("plus_i.json")),
                                 ConvertMode::fidelity_at_prob, 0.5, opt);
    const std::string csv = render(c, Format::csv);
    const auto pos = csv.find("\np,fidelity\n");
    ASSERT_NE(pos, std::string::npos);
    std::istringstream rest(csv.substr(pos + 12));
    std::string line;
    int rows = 0;
    while (std::getline(rest, line) && !line.empty()) ++rows;
    EXPECT_EQ(rows, 7);
}

TEST(Report, DigestIsFnv1a) {
    EXPECT_EQ(digest({}), "fnv1a64:cbf29ce484222325");
    EXPECT_EQ(digest({""}), "fnv1a64:af63bd4c8601b7df");
    EXPECT_NE(digest({"ab", "c"}), digest({"a", "bc"}));
}

TEST(Report, NonFiniteValuesAreRejected) {
    Report r;
    r.add("x", std::nan(""));
    EXPECT_THROW(r.require_finite(), InvariantError);
}

TEST(Measure, PlusIHasImaginarityHalf) {
    const Report r = cmd_measure(load_input(data("plus_i.json")), kOpt);
    EXPECT_NEAR(scalar(r, "geometric_imaginarity"), 0.5, 1e-12);
    EXPECT_FALSE(flag(r, "real"));
}

TEST(Measure, EtaMonotonesMatchTraceNormOracle) {
    const Report r = cmd_measure(load_input(data("eta.json")), kOpt);
    const MatrixFile f = read_matrix_file(data("eta.json"));
    const double oracle_d =
        oracle::trace_norm_hermitian(f.matrices[0] - oracle::partial_transpose_b(f.matrices[0], 2, 2));
    EXPECT_NEAR(scalar(r, "entanglement_monotone_A"), oracle_d, 1e-9);
    EXPECT_NEAR(scalar(r, "entanglement_monotone_B"), oracle_d, 1e-9);
    EXPECT_NEAR(oracle_d, 2.0, 1e-12);
}

TEST(Measure, RealStateGivesZeros) {
    const Report r = cmd_measure(load_input(data("real_mixed.json")), kOpt);
    EXPECT_NEAR(scalar(r, "geometric_imaginarity"), 0.0, 1e-15);
    EXPECT_TRUE(flag(r, "real"));
}

TEST(Convert, ExactRatio) {
    const Report r =
        cmd_convert(load_input(data("tilted.json")), load_input(data("plus_i.json")), ConvertMode::exact, 0.0, kOpt);
    const double expected = std::pow(std::sin(std::numbers::pi / 8), 2) / 0.5;
    EXPECT_NEAR(scalar(r, "probability"), expected, 1e-12);
}

TEST(Convert, FeasibleReflexive) {
    const Input rho = load_input(data("mixed_qubit.json"));
    const Report r = cmd_convert(rho, rho, ConvertMode::feasible, 0.0, kOpt);
    EXPECT_NEAR(scalar(r, "alpha"), 1.0, 1e-6);
    EXPECT_TRUE(flag(r, "feasible"));
}

TEST(Convert, FidelityIsOneBelowExactRatio) {
    const Report r = cmd_convert(load_input(data("tilted.json")), load_input(data("plus_i.json")),
                                 ConvertMode::fidelity_at_prob, 0.2, kOpt);
    EXPECT_NEAR(scalar(r, "fidelity"), 1.0, 1e-12);
}

TEST(Convert, CurvesAreMonotoneAndSized) {
    const Input src = load_input(data("tilted.json"));
    const Input dst = load_input(data("plus_i.json"));
    const Report pf = cmd_convert(src, dst, ConvertMode::prob_at_fidelity, 0.9, kOpt);
    const Table *t = pf.find_table("probability_vs_fidelity");
    ASSERT_NE(t, nullptr);
    ASSERT_EQ(t->rows.size(), kDefaultCurvePoints);
    for (std::size_t k = 1; k < t->rows.size(); ++k) {
        EXPECT_GT(t->rows[k][0], t->rows[k - 1][0]);
        EXPECT_LE(t->rows[k][1], t->rows[k - 1][1] + 1e-12);
    }
    const Report fp = cmd_convert(src, dst, ConvertMode::fidelity_at_prob, 0.5, kOpt);
    const Table *u = fp.find_table("fidelity_vs_probability");
    ASSERT_NE(u, nullptr);
    for (std::size_t k = 1; k < u->rows.size(); ++k) EXPECT_LE(u->rows[k][1], u->rows[k - 1][1] + 1e-12);
    EXPECT_NEAR(u->rows.back()[0], 1.0, 1e-15);
}

TEST(Convert, SdpFidelityAgreesWithClosedForm) {
    Options opt;
    opt.curve_points = 5;
    const Report r = cmd_convert(load_input(data("tilted.json")), load_input(data("plus_i.json")),
                                 ConvertMode::sdp_fidelity, 0.6, opt);
    EXPECT_NEAR(scalar(r, "fidelity"), scalar(r, "closed_form_fidelity"), 1e-6);
    const Table *t = r.find_table("fidelity_vs_probability");
    ASSERT_NE(t, nullptr);
    EXPECT_EQ(t->rows.size(), 5u);
}

TEST(Convert, MixedSourceRefusedForAnalyticModes) {
    const Input src = load_input(data("mixed_qubit.json"));
    const Input dst = load_input(data("plus_i.json"));
    for (ConvertMode m : {ConvertMode::exact, ConvertMode::prob_at_fidelity, ConvertMode::fidelity_at_prob}) {
        try {
            cmd_convert(src, dst, m, 0.5, kOpt);
            FAIL() << "expected refusal";
        } catch (const InvariantError &e) {
            EXPECT_NE(std::string(e.what()).find("pure source"), std::string::npos) << e.what();
        }
    }
}

TEST(Convert, SdpFidelityNeedsPureTarget) {
    const Input src = load_input(data("tilted.json"));
    EXPECT_THROW(cmd_convert(src, load_input(data("mixed_qubit.json")), ConvertMode::sdp_fidelity, 0.5, kOpt),
                 InvariantError);
}

TEST(Decompose, PureInputGivesOneMember) {
    const Report r = cmd_decompose(load_input(data("plus_i.json")), DecomposeKind::conjugate_orthogonal, kOpt);
    EXPECT_EQ(scalar(r, "members"), 1.0);
}

TEST(Decompose, RealMixedGivesEigenensemble) {
    const Input in = load_input(data("real_mixed.json"));
    const Report r = cmd_decompose(in, DecomposeKind::conjugate_orthogonal, kOpt);
    const Table *t = r.find_table("members");
    ASSERT_NE(t, nullptr);
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(in.file.matrices[0]);
    std::vector<double> weights;
    for (const auto &row : t->rows) {
        weights.push_back(row[1]);
        EXPECT_NEAR(row[2], 0.0, 1e-12);
    }
    std::sort(weights.begin(), weights.end());
    ASSERT_EQ(weights.size(), 2u);
    EXPECT_NEAR(weights[0], es.eigenvalues()(0), 1e-12);
    EXPECT_NEAR(weights[1], es.eigenvalues()(1), 1e-12);
}

TEST(Decompose, QubitMembersShareImaginarity) {
    const Input in = load_input(data("mixed_qubit.json"));
    const Report r = cmd_decompose(in, DecomposeKind::equal_imaginarity, kOpt);
    const double target = oracle::qubit_mixed_imaginarity_search(in.file.matrices[0]);
    for (const auto &row : r.find_table("members")->rows) EXPECT_NEAR(row[2], target, 1e-6);
    EXPECT_LE(scalar(r, "reconstruction_error"), 1e-8);
}

TEST(Kraus, ChecksAndTransforms) {
    EXPECT_TRUE(flag(cmd_kraus({load_input(data("real_kraus.json"))}, KrausAction::check_real, kOpt), "is_real"));
    EXPECT_FALSE(
        flag(cmd_kraus({load_input(data("phase_kraus.json"))}, KrausAction::check_covariant, kOpt), "covariant"));
    const Report r = cmd_kraus({load_input(data("covariant_kraus.json"))}, KrausAction::realify, kOpt);
    EXPECT_LE(scalar(r, "output_max_imag"), 1e-9);
    EXPECT_LE(scalar(r, "action_difference"), 1e-9);
    ASSERT_TRUE(r.artifact.has_value());
    EXPECT_TRUE(as_kraus(*r.artifact, {}).is_real());
}

TEST(Kraus, RealifyRefusesNonCovariantWithResidual) {
    try {
        cmd_kraus({load_input(data("phase_kraus.json"))}, KrausAction::realify, kOpt);
        FAIL() << "expected refusal";
    } catch (const InvariantError &e) {
        EXPECT_NE(std::string(e.what()).find("residual 2"), std::string::npos) << e.what();
    }
}

TEST(Kraus, MergeNeedsTwoFiles) {
    const Input a = load_input(data("real_kraus.json"));
    const Input b = load_input(data("covariant_kraus.json"));
    const Report r = cmd_kraus({a, b}, KrausAction::merge, kOpt);
    EXPECT_TRUE(flag(r, "output_trace_preserving"));
    EXPECT_THROW(cmd_kraus({a}, KrausAction::merge, kOpt), DimensionError);
}

TEST(Run, ExitCodes) {
    EXPECT_EQ(invoke({"measure", data("plus_i.json")}).code, 0);
    EXPECT_EQ(invoke({"measure", data("malformed.json")}).code, 2);
    EXPECT_EQ(invoke({"measure"}).code, 2);
    EXPECT_EQ(invoke({"convert", data("tilted.json"), data("plus_i.json"), "--mode", "bogus"}).code, 2);
    EXPECT_EQ(invoke({"measure", data("not_hermitian.json")}).code, 3);
    const RunResult mixed = invoke({"convert", data("mixed_qubit.json"), data("plus_i.json"), "--mode", "exact"});
    EXPECT_EQ(mixed.code, 3);
    EXPECT_NE(mixed.err.find("pure source"), std::string::npos);
    EXPECT_EQ(invoke({"convert", data("tilted.json"), data("plus_i.json"), "--mode", "prob-at-fidelity"}).code, 3);
    EXPECT_EQ(exit_code(ErrorCategory::solver), 4);
    EXPECT_EQ(exit_code(ErrorCategory::convergence), 4);
}

TEST(Run, FormatsAndOutputFile) {
    const RunResult text = invoke({"measure", data("plus_i.json")});
    EXPECT_NE(text.out.find("geometric_imaginarity = 0.5"), std::string::npos) << text.out;
    const RunResult csv = invoke({"measure", data("plus_i.json"), "--format", "csv"});
    EXPECT_EQ(csv.out.rfind("name,value\n", 0), 0u);
    const std::string path = ::testing::TempDir() + "imkit_report.json";
    ASSERT_EQ(invoke({"measure", data("plus_i.json"), "--format", "structured", "--output", path}).code, 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const Report r = parse_structured(ss.str());
    EXPECT_EQ(r.command, "measure");
    EXPECT_NEAR(std::get<double>(*r.find("geometric_imaginarity")), 0.5, 1e-15);
}

TEST(Run, KrausOutWritesParseableFile) {
    const std::string path = ::testing::TempDir() + "imkit_real.json";
    ASSERT_EQ(invoke({"kraus", data("covariant_kraus.json"), "--action", "realify", "--kraus-out", path}).code, 0);
    const MatrixFile f = read_matrix_file(path);
    EXPECT_EQ(f.kind, FileKind::kraus_set);
    EXPECT_TRUE(as_kraus(f, {}).is_real());
}

TEST(Run, SolverGapFromEnvironmentReachesProvenance) {
    ::setenv("IMKIT_SOLVER_GAP", "1e-7", 1);
    const RunResult r = invoke({"measure", data("plus_i.json"), "--format", "structured"});
    ::unsetenv("IMKIT_SOLVER_GAP");
    EXPECT_DOUBLE_EQ(parse_structured(r.out).provenance.solver_gap, 1e-7);
}

TEST(Run, TolFlagReachesProvenance) {
    const RunResult r = invoke({"measure", data("plus_i.json"), "--format", "structured", "--tol", "1e-6"});
    EXPECT_DOUBLE_EQ(parse_structured(r.out).provenance.tolerances.psd, 1e-6);
}
