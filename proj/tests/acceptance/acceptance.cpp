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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "imkit/imkit.hpp"
#include "imkit/random.hpp"
#include "oracles.hpp"

using namespace imkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// Random state of dimension 2..4 whose rank cycles through full and deficient.
DensityMatrix sample_state(random::Rng &rng, int k) {
    const Index d = 2 + k % 3;
    const Index rank = (k % 5 == 4) ? 1 + (k / 5) % d : 0;
    return random::density_matrix(d, rng, rank);
}

Outcome closed_form_vs_decomposition() {
    random::Rng rng(1001);
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const DensityMatrix rho = sample_state(rng, k);
        const ConjugateOrthogonalEnsemble co = conjugate_orthogonal_decomposition(rho);
        worst = std::max(worst, std::abs(geometric_imaginarity(rho) - co.ensemble.average_imaginarity()));
    }
    const double t = seconds_since(t0);
    const bool ok = worst <= 1e-8 && t < 10.0;
    return {ok, "200 states, max |I_g - ensemble average| = " + fmt("%.3e", worst) + " (tol 1e-8), runtime " +
                    fmt("%.3f", t) + " s (limit 10 s)"};
}

Outcome equal_imaginarity() {
    random::Rng rng(1002);
    double worst_member = 0.0;
    double worst_rec = 0.0;
    for (int k = 0; k < 100; ++k) {
        const DensityMatrix rho = sample_state(rng, k);
        const double g = geometric_imaginarity(rho);
        const Ensemble e = equal_imaginarity_decomposition(rho);
        for (const auto &m : e.members) worst_member = std::max(worst_member, std::abs(geometric_imaginarity(m.state) - g));
        worst_rec = std::max(worst_rec, max_abs_diff(e.mixture(), rho.matrix()));
    }
    const bool ok = worst_member <= 1e-8 && worst_rec <= 1e-8;
    return {ok, "100 states, max member deviation " + fmt("%.3e", worst_member) + ", max reconstruction error " +
                    fmt("%.3e", worst_rec) + " (tol 1e-8)"};
}

Outcome singular_value_identity() {
    random::Rng rng(1001);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const DensityMatrix rho = sample_state(rng, k);
        const double root_f = std::sqrt(oracle::fidelity(rho.matrix(), rho.matrix().transpose()));
        worst = std::max(worst, std::abs(conjugate_orthogonal_decomposition(rho).diag.sum() - root_f));
    }
    return {worst <= 1e-8, "200 states, max |sum D_j - sqrt F(rho, rho^T)| = " + fmt("%.3e", worst) + " (tol 1e-8)"};
}

Outcome sdp_vs_closed_form_fidelity() {
    random::Rng rng(1004);
    const auto t0 = Clock::now();
    double worst = 0.0;
    int unusable = 0;
    for (int k = 0; k < 50; ++k) {
        const Index d = 2 + k % 2;
        const PureState phi = random::pure_state(d, rng);
        const PureState psi = random::pure_state(d, rng);
        const DensityMatrix source = DensityMatrix::from_pure(phi);
        const DensityMatrix target = DensityMatrix::from_pure(psi);
        for (int j = 1; j <= 10; ++j) {
            const double p = j / 10.0;
            const SdpSolution s = optimal_fidelity_pure_target(source, psi, p);
            if (s.solver_status != SolverStatus::optimal && s.solver_status != SolverStatus::near_optimal) ++unusable;
            worst = std::max(worst, std::abs(s.objective - approx_fidelity(phi, target, p).fidelity));
        }
    }
    const double t = seconds_since(t0);
    const bool ok = worst <= 1e-5 && unusable == 0 && t < 300.0;
    return {ok, "50 pairs x 10 probabilities, max |SDP - closed form| = " + fmt("%.3e", worst) +
                    " (tol 1e-5), solver failures " + std::to_string(unusable) + ", runtime " + fmt("%.2f", t) +
                    " s (limit 300 s)"};
}

Outcome transformation_sdp_sanity() {
    random::Rng rng(1005);
    double worst_reflexive = 0.0;
    int reflexive_fail = 0;
    for (int k = 0; k < 50; ++k) {
        const DensityMatrix rho = random::density_matrix(2 + k % 2, rng);
        const FeasibilityReport r = feasibility_alpha(rho, rho);
        worst_reflexive = std::max(worst_reflexive, std::abs(r.alpha - 1.0));
        if (!r.feasible) ++reflexive_fail;
    }
    double smallest_gap = std::numeric_limits<double>::infinity();
    int infeasible_miss = 0;
    int pairs = 0;
    while (pairs < 50) {
        const DensityMatrix rho = random::real_density_matrix(2 + pairs % 2, rng);
        const DensityMatrix sigma = random::density_matrix(2 + (pairs / 2) % 2, rng, 1 + pairs % 2);
        if (geometric_imaginarity(sigma) <= geometric_imaginarity(rho) + 0.05) continue;
        const FeasibilityReport r = feasibility_alpha(rho, sigma);
        const double gap = std::abs(r.alpha - 1.0);
        smallest_gap = std::min(smallest_gap, gap);
        const bool usable = r.solver_status == SolverStatus::optimal || r.solver_status == SolverStatus::near_optimal;
        if (!usable || gap <= 1e-4 || r.feasible) ++infeasible_miss;
        ++pairs;
    }
    const bool ok = reflexive_fail == 0 && worst_reflexive <= 1e-6 && infeasible_miss == 0;
    return {ok, "reflexive: max |alpha - 1| = " + fmt("%.3e", worst_reflexive) + " (tol 1e-6), " +
                    std::to_string(reflexive_fail) + " misses; real -> imaginary: min |alpha - 1| = " +
                    fmt("%.3e", smallest_gap) + " (need > 1e-4), " + std::to_string(infeasible_miss) + " misses"};
}

Outcome worked_numbers() {
    constexpr double kPi = std::numbers::pi;
    std::string detail;
    bool ok = true;
    const auto check = [&](const char *name, double value, double reference, double tol) {
        const double err = std::abs(value - reference);
        ok = ok && err <= tol;
        detail += std::string(detail.empty() ? "" : "; ") + name + " " + fmt("%.9f", value) + " vs " +
                  fmt("%.9f", reference) + " (tol " + fmt("%.0e", tol) + ")";
    };
    const PureState src = fixtures::tilted(kPi / 8.0);
    const DensityMatrix dst = DensityMatrix::from_pure(fixtures::plus_i());
    check("I_g", geometric_imaginarity(src), oracle::qubit_pure_imaginarity_grid(src.amplitudes()), 1e-6);
    check("P_exact", prob_exact(src, dst), std::pow(std::sin(kPi / 8.0), 2) / 0.5, 1e-9);
    const double f = std::pow(std::cos(kPi / 16.0), 2);
    check("P_f", approx_prob(src, dst, f).probability,
          std::pow(std::sin(kPi / 8.0), 2) / std::pow(std::sin(3.0 * kPi / 16.0), 2), 1e-6);
    check("D(eta)", real_entanglement_monotone(BipartiteState(fixtures::eta(), 2, 2), Side::B),
          oracle::trace_norm_hermitian(fixtures::eta() - oracle::partial_transpose_b(fixtures::eta(), 2, 2)), 1e-9);
    return {ok, detail};
}

Outcome monotonicity() {
    random::Rng rng(1007);
    double worst_single = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 200; ++k) {
        const Index d_in = 2 + k % 3;
        const Index d_out = 2 + (k / 3) % 3;
        const DensityMatrix rho = random::density_matrix(d_in, rng);
        const KrausSet ch = random::real_channel(d_in, d_out, d_in + k % 2, rng);
        const DensityMatrix out(ch.apply(rho.matrix()));
        worst_single = std::max(worst_single, geometric_imaginarity(out) - geometric_imaginarity(rho));
    }
    double worst_local = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 200; ++k) {
        const BipartiteState s(random::density_matrix(4, rng), 2, 2);
        const KrausSet ka = random::real_channel(2, 2, 1 + k % 3, rng);
        const KrausSet kb = random::real_channel(2, 2, 1 + (k / 3) % 3, rng);
        ComplexMatrix out = ComplexMatrix::Zero(4, 4);
        for (const auto &a : ka.ops())
            for (const auto &b : kb.ops()) {
                const ComplexMatrix kk = tensor(a, b);
                out += kk * s.matrix() * kk.adjoint();
            }
        const BipartiteState after(out, 2, 2);
        worst_local = std::max(worst_local, real_entanglement_monotone(after, Side::B) -
                                                real_entanglement_monotone(s, Side::B));
    }
    const bool ok = worst_single <= 1e-8 && worst_local <= 1e-8;
    return {ok, "200 real channels: max increase of I_g " + fmt("%.3e", worst_single) +
                    "; 200 local real pairs: max increase of D " + fmt("%.3e", worst_local) + " (slack 1e-8)"};
}

Outcome covariant_realification() {
    random::Rng rng(1008);
    double worst_action = 0.0;
    double worst_imag = 0.0;
    for (int k = 0; k < 50; ++k) {
        const Index d_in = 2 + k % 3;
        const Index d_out = 2 + (k / 3) % 2;
        const KrausSet cov = random::covariant_channel(d_in, d_out, d_in, rng);
        const KrausSet real = realify_covariant(cov);
        for (const auto &op : real.ops()) worst_imag = std::max(worst_imag, max_imag(op));
        for (Index i = 0; i < d_in; ++i)
            for (Index j = 0; j < d_in; ++j) {
                ComplexMatrix e = ComplexMatrix::Zero(d_in, d_in);
                e(i, j) = 1.0;
                worst_action = std::max(worst_action, max_abs_diff(real.apply(e), cov.apply(e)));
            }
    }
    const bool ok = worst_action <= 1e-9 && worst_imag <= 1e-9;
    return {ok, "50 covariant channels: max action difference on matrix units " + fmt("%.3e", worst_action) +
                    ", max imaginary entry " + fmt("%.3e", worst_imag) + " (tol 1e-9)"};
}

Outcome ball_extremes() {
    random::Rng rng(1009);
    std::uniform_real_distribution<double> uf(0.0, 1.0);
    double worst_fid = 0.0;
    double worst_value = 0.0;
    for (int k = 0; k < 100; ++k) {
        const Index d = 2 + k % 3;
        const double f = uf(rng);
        const DensityMatrix rho = random::density_matrix(d, rng);
        const DensityMatrix rmin = min_imaginarity_state(rho, f);
        worst_fid = std::max(worst_fid, f - oracle::fidelity(rho.matrix(), rmin.matrix()));
        worst_value = std::max(worst_value, std::abs(geometric_imaginarity(rmin) - min_geometric_in_ball(rho, f)));

        const PureState psi = random::pure_state(d, rng);
        const PureState pmax = max_imaginarity_state(psi, f);
        worst_fid = std::max(worst_fid, f - std::norm(psi.amplitudes().dot(pmax.amplitudes())));
        worst_value = std::max(worst_value, std::abs(geometric_imaginarity(pmax) - max_geometric_in_ball(psi, f)));
    }
    const bool ok = worst_fid <= 1e-9 && worst_value <= 1e-8;
    return {ok, "100 (state, f) pairs: max fidelity shortfall " + fmt("%.3e", std::max(worst_fid, 0.0)) +
                    " (tol 1e-9), max deviation from closed form " + fmt("%.3e", worst_value) + " (tol 1e-8)"};
}

} // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"closed-form imaginarity equals conjugate-orthogonal ensemble average", closed_form_vs_decomposition},
        {"equal-imaginarity decomposition", equal_imaginarity},
        {"conjugate-orthogonal weights sum to root fidelity with transpose", singular_value_identity},
        {"optimal-fidelity SDP matches closed-form F_p", sdp_vs_closed_form_fidelity},
        {"transformation SDP reflexivity and real-to-imaginary infeasibility", transformation_sdp_sanity},
        {"worked numbers", worked_numbers},
        {"monotonicity under real and local real operations", monotonicity},
        {"covariant channels realified with identical action", covariant_realification},
        {"fidelity-ball extremes attained by constructed states", ball_extremes},
    };

    int failed = 0;
    int index = 1;
    for (const Criterion &c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const Error &e) {
            o = {false, std::string("threw ") + to_string(e.category()) + " error: " + e.what()};
        }
        std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", index++, c.name, o.detail.c_str());
        if (!o.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
