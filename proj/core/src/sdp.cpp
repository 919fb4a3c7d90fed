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

#include "imkit/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace imkit {

bool ChoiMatrix::is_real(double tol) const {
    return max_imag(mat) <= tol && max_abs_diff(mat, mat.transpose()) <= tol;
}

ComplexMatrix ChoiMatrix::output_trace() const { return partial_trace(mat, d_in, d_out, Side::B); }

ChoiMatrix choi_from_kraus(const KrausSet &k) {
    const Index din = k.d_in();
    const Index dout = k.d_out();
    ChoiMatrix c{din, dout, ComplexMatrix::Zero(din * dout, din * dout)};
    for (Index i = 0; i < din; ++i) {
        for (Index j = 0; j < din; ++j) {
            ComplexMatrix e = ComplexMatrix::Zero(din, din);
            e(i, j) = 1.0;
            c.mat.block(i * dout, j * dout, dout, dout) = k.apply(e);
        }
    }
    return c;
}

ComplexMatrix apply_choi(const ChoiMatrix &c, const ComplexMatrix &rho) {
    if (rho.rows() != c.d_in || rho.cols() != c.d_in) {
        throw DimensionError("apply_choi: input is " + std::to_string(rho.rows()) + "x" +
                             std::to_string(rho.cols()) + ", map expects dimension " + std::to_string(c.d_in));
    }
    const ComplexMatrix lifted = c.mat * tensor(rho.transpose(), ComplexMatrix::Identity(c.d_out, c.d_out));
    return partial_trace(lifted, c.d_in, c.d_out, Side::A);
}

ComplexMatrix apply_choi(const ChoiMatrix &c, const DensityMatrix &rho) { return apply_choi(c, rho.matrix()); }

RealMatrix real_embed(const ComplexMatrix &h) {
    const Index n = h.rows();
    RealMatrix out(2 * n, 2 * n);
    out << h.real(), -h.imag(), h.imag(), h.real();
    return out;
}

namespace {

// Orthonormal basis of n x n Hermitian matrices under <A, B> = Re Tr(A B).
std::vector<ComplexMatrix> hermitian_basis(Index n) {
    std::vector<ComplexMatrix> out;
    const double s = 1.0 / std::numbers::sqrt2;
    for (Index k = 0; k < n; ++k) {
        ComplexMatrix e = ComplexMatrix::Zero(n, n);
        e(k, k) = 1.0;
        out.push_back(e);
    }
    for (Index k = 0; k < n; ++k) {
        for (Index l = k + 1; l < n; ++l) {
            ComplexMatrix re = ComplexMatrix::Zero(n, n);
            re(k, l) = re(l, k) = s;
            out.push_back(re);
            ComplexMatrix im = ComplexMatrix::Zero(n, n);
            im(k, l) = Complex(0.0, s);
            im(l, k) = Complex(0.0, -s);
            out.push_back(im);
        }
    }
    return out;
}

// Orthonormal basis of n x n real symmetric matrices.
std::vector<RealMatrix> symmetric_basis(Index n) {
    std::vector<RealMatrix> out;
    for (const ComplexMatrix &h : hermitian_basis(n)) {
        if (max_imag(h) == 0.0) out.push_back(h.real());
    }
    return out;
}

// For a Hermitian variable W stored as a 2n x 2n real block M, the linear
// functional Re Tr(H W) reads <real_embed(H) / 2, M>.
RealMatrix functional(const ComplexMatrix &h) { return 0.5 * real_embed(h); }

ComplexMatrix combine(const std::vector<ComplexMatrix> &basis, const RealVector &y, Index offset) {
    ComplexMatrix out = ComplexMatrix::Zero(basis.front().rows(), basis.front().cols());
    for (std::size_t k = 0; k < basis.size(); ++k) out += y(offset + static_cast<Index>(k)) * basis[k];
    return out;
}

bool usable(SolverStatus s) { return s == SolverStatus::optimal || s == SolverStatus::near_optimal; }

} // namespace

// The transformation program is handed to the solver through its dual: the
// solver's primal variables are a channel W (Choi form on C (x) B, C the
// output), slacks S1 = Lambda(rho) - t sigma, S2 = Lambda(rho^T) - t sigma^T
// and t >= 0, maximizing t. The multipliers y of the three equality families
// are -Z, X2 and X1 of the stated program, whose optimum is alpha.
FeasibilityReport feasibility_alpha(const DensityMatrix &rho, const DensityMatrix &sigma, const ConicSolver &solver,
                                    double tol_alpha) {
    const Index db = rho.dim();
    const Index dc = sigma.dim();
    const ComplexMatrix &r = rho.matrix();
    const ComplexMatrix rt = r.transpose();
    const ComplexMatrix &s = sigma.matrix();
    const ComplexMatrix st = s.transpose();

    enum Block : std::size_t { kW = 0, kS1 = 1, kS2 = 2, kT = 3 };
    SdpProblem prob({2 * dc * db, 2 * dc, 2 * dc, 1});
    prob.cost[kT](0, 0) = -1.0;

    const auto basis_b = hermitian_basis(db);
    const auto basis_c = hermitian_basis(dc);
    const ComplexMatrix id_c = ComplexMatrix::Identity(dc, dc);

    // Tr_C W = I_B.
    for (const ComplexMatrix &h : basis_b) {
        const std::size_t i = prob.add_constraint(h.trace().real());
        prob.constraints[i][kW] = functional(tensor(id_c, h));
    }
    // Lambda(rho) - t sigma - S1 = 0 with Lambda(rho) = Tr_B[W (I (x) rho^T)].
    for (const ComplexMatrix &g : basis_c) {
        const std::size_t i = prob.add_constraint(0.0);
        prob.constraints[i][kW] = functional(tensor(g, rt));
        prob.constraints[i][kS1] = -functional(g);
        prob.constraints[i][kT] = RealMatrix::Constant(1, 1, -(g * s).trace().real());
    }
    // Lambda(rho^T) - t sigma^T - S2 = 0.
    for (const ComplexMatrix &g : basis_c) {
        const std::size_t i = prob.add_constraint(0.0);
        prob.constraints[i][kW] = functional(tensor(g, r));
        prob.constraints[i][kS2] = -functional(g);
        prob.constraints[i][kT] = RealMatrix::Constant(1, 1, -(g * st).trace().real());
    }

    const SdpResult res = solver.solve(prob);

    FeasibilityReport rep;
    rep.solver_status = res.status;
    rep.iterations = res.iterations;
    if (res.y.size() == static_cast<Index>(prob.constraints.size())) {
        const Index nb = static_cast<Index>(basis_b.size());
        const Index nc = static_cast<Index>(basis_c.size());
        rep.z_cert = -combine(basis_b, res.y, 0);
        rep.x2_cert = combine(basis_c, res.y, nb);
        rep.x1_cert = combine(basis_c, res.y, nb + nc);
        rep.alpha = rep.z_cert.trace().real();
    }
    rep.feasible = usable(res.status) && std::abs(rep.alpha - 1.0) <= tol_alpha;
    return rep;
}

FeasibilityReport feasibility_alpha(const DensityMatrix &rho, const DensityMatrix &sigma, const SolverConfig &config,
                                    double tol_alpha) {
    return feasibility_alpha(rho, sigma, InteriorPointSolver(config), tol_alpha);
}

SdpSolution optimal_fidelity_pure_target(const DensityMatrix &rho, const PureState &psi, double p,
                                         const ConicSolver &solver) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw DomainError("success probability must lie in (0, 1], got " + format_number(p));
    }
    const Index da = rho.dim();
    const Index db = psi.dim();
    const ComplexMatrix rt = rho.matrix().transpose();
    const ComplexMatrix id_b = ComplexMatrix::Identity(db, db);

    enum Block : std::size_t { kChoi = 0, kSlack = 1 };

    // At p = 1 the slack I - Tr_B Sigma must vanish on the support of Re(rho),
    // so no strictly feasible point exists. The slack is then restricted to
    // the kernel of Re(rho) and the normalization holds automatically.
    const bool full_success = p >= 1.0 - 1e-12;
    RealMatrix slack_basis = RealMatrix::Identity(da, da);
    if (full_success) {
        Eigen::SelfAdjointEigenSolver<RealMatrix> es(rho.matrix().real());
        const double cut = 1e-10 * std::max(1.0, es.eigenvalues().maxCoeff());
        Index kernel = 0;
        while (kernel < da && es.eigenvalues()(kernel) <= cut) ++kernel;
        slack_basis = es.eigenvectors().leftCols(kernel);
    }
    const bool has_slack = slack_basis.cols() > 0;

    std::vector<Index> sizes{da * db};
    if (has_slack) sizes.push_back(slack_basis.cols());
    SdpProblem prob(sizes);
    prob.cost[kChoi] = -tensor(rt, psi.projector()).real() / p;

    // Tr_B Sigma + N S N^T = I.
    for (const RealMatrix &e : symmetric_basis(da)) {
        const std::size_t i = prob.add_constraint(e.trace());
        prob.constraints[i][kChoi] = tensor(e.cast<Complex>(), id_b).real();
        if (has_slack) prob.constraints[i][kSlack] = slack_basis.transpose() * e * slack_basis;
    }
    if (!full_success) {
        // Tr[Sigma (rho^T (x) I)] / p = 1.
        const std::size_t norm = prob.add_constraint(1.0);
        prob.constraints[norm][kChoi] = tensor(rt, id_b).real() / p;
    }

    const SdpResult res = solver.solve(prob);

    SdpSolution out;
    out.solver_status = res.status;
    out.iterations = res.iterations;
    out.objective = -res.primal_objective;
    if (!res.x.empty()) {
        out.choi = ChoiMatrix{da, db, res.x[kChoi].cast<Complex>()};
    }
    return out;
}

SdpSolution optimal_fidelity_pure_target(const DensityMatrix &rho, const PureState &psi, double p,
                                         const SolverConfig &config) {
    return optimal_fidelity_pure_target(rho, psi, p, InteriorPointSolver(config));
}

} // namespace imkit
