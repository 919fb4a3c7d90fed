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

#include "imkit/conic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace imkit {

const char *to_string(SolverStatus s) noexcept {
    switch (s) {
    case SolverStatus::optimal: return "optimal";
    case SolverStatus::near_optimal: return "near_optimal";
    case SolverStatus::infeasible_numeric: return "infeasible_numeric";
    case SolverStatus::failed: return "failed";
    }
    return "unknown";
}

SolverConfig SolverConfig::from_environment() {
    SolverConfig c;
    if (const char *env = std::getenv("IMKIT_SOLVER_GAP")) {
        char *end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) c.gap_tol = v;
    }
    return c;
}

SdpProblem::SdpProblem(std::vector<Index> sizes) : block_sizes(std::move(sizes)) {
    for (Index n : block_sizes) cost.push_back(RealMatrix::Zero(n, n));
}

std::size_t SdpProblem::add_constraint(double rhs_value) {
    constraints.emplace_back(block_sizes.size());
    rhs.conservativeResize(rhs.size() + 1);
    rhs(rhs.size() - 1) = rhs_value;
    return constraints.size() - 1;
}

void SdpProblem::validate() const {
    if (cost.size() != block_sizes.size()) {
        throw DimensionError("SdpProblem: cost has wrong number of blocks");
    }
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        if (block_sizes[b] <= 0 || cost[b].rows() != block_sizes[b] || cost[b].cols() != block_sizes[b]) {
            throw DimensionError("SdpProblem: cost block " + std::to_string(b) + " has wrong shape");
        }
    }
    if (static_cast<Index>(constraints.size()) != rhs.size()) {
        throw DimensionError("SdpProblem: rhs length does not match constraint count");
    }
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        if (constraints[i].size() != block_sizes.size()) {
            throw DimensionError("SdpProblem: constraint " + std::to_string(i) + " has wrong block count");
        }
        for (std::size_t b = 0; b < block_sizes.size(); ++b) {
            const RealMatrix &a = constraints[i][b];
            if (a.size() != 0 && (a.rows() != block_sizes[b] || a.cols() != block_sizes[b])) {
                throw DimensionError("SdpProblem: constraint " + std::to_string(i) + " block " +
                                     std::to_string(b) + " has wrong shape");
            }
        }
    }
}

namespace {

using Blocks = std::vector<RealMatrix>;

double inner(const RealMatrix &a, const RealMatrix &b) {
    if (a.size() == 0 || b.size() == 0) return 0.0;
    return a.cwiseProduct(b).sum();
}

double inner(const Blocks &a, const Blocks &b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += inner(a[k], b[k]);
    return s;
}

double frob(const Blocks &a) { return std::sqrt(inner(a, a)); }

RealVector apply_a(const SdpProblem &p, const Blocks &x) {
    RealVector out(p.constraints.size());
    for (std::size_t i = 0; i < p.constraints.size(); ++i) out(static_cast<Index>(i)) = inner(p.constraints[i], x);
    return out;
}

Blocks apply_at(const SdpProblem &p, const RealVector &y) {
    Blocks out;
    for (Index n : p.block_sizes) out.push_back(RealMatrix::Zero(n, n));
    for (std::size_t i = 0; i < p.constraints.size(); ++i) {
        for (std::size_t b = 0; b < out.size(); ++b) {
            if (p.constraints[i][b].size() != 0) out[b] += y(static_cast<Index>(i)) * p.constraints[i][b];
        }
    }
    return out;
}

void symmetrize(Blocks &a) {
    for (auto &m : a) m = 0.5 * (m + m.transpose()).eval();
}

// Largest t with x + t dx >= 0 (infinity if unbounded). Zero if x is not
// positive definite.
double max_step(const RealMatrix &x, const RealMatrix &dx) {
    Eigen::LLT<RealMatrix> llt(x);
    if (llt.info() != Eigen::Success) return 0.0;
    const RealMatrix linv_dx = llt.matrixL().solve(dx);
    const RealMatrix scaled = llt.matrixL().solve(linv_dx.transpose());
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (scaled + scaled.transpose()), Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff();
    if (lmin >= 0.0) return std::numeric_limits<double>::infinity();
    return -1.0 / lmin;
}

double max_step(const Blocks &x, const Blocks &dx) {
    double t = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < x.size(); ++b) t = std::min(t, max_step(x[b], dx[b]));
    return t;
}

struct Metrics {
    double pobj, dobj, gap, pinf, dinf;
    double worst() const { return std::max({gap, pinf, dinf}); }
};

Metrics measure(const SdpProblem &p, const Blocks &x, const RealVector &y, const Blocks &s, double norm_b,
                double norm_c) {
    Metrics m{};
    m.pobj = inner(p.cost, x);
    m.dobj = p.rhs.dot(y);
    const double denom = 1.0 + std::abs(m.pobj) + std::abs(m.dobj);
    m.gap = std::max(std::abs(m.pobj - m.dobj), std::abs(inner(x, s))) / denom;
    m.pinf = (p.rhs - apply_a(p, x)).norm() / (1.0 + norm_b);
    Blocks rd = apply_at(p, y);
    for (std::size_t b = 0; b < rd.size(); ++b) rd[b] = p.cost[b] - rd[b] - s[b];
    m.dinf = frob(rd) / (1.0 + norm_c);
    return m;
}

} // namespace

SdpResult InteriorPointSolver::solve(const SdpProblem &p) const {
    p.validate();
    const std::size_t nb = p.block_sizes.size();
    const Index m = static_cast<Index>(p.constraints.size());
    double n_total = 0.0;
    for (Index n : p.block_sizes) n_total += static_cast<double>(n);

    const double norm_b = p.rhs.norm();
    const double norm_c = frob(p.cost);

    // Starting point: scaled identities, sized from the data.
    double max_a = 0.0;
    double x_scale = 0.0;
    for (Index i = 0; i < m; ++i) {
        const double na = frob(p.constraints[static_cast<std::size_t>(i)]);
        max_a = std::max(max_a, na);
        x_scale = std::max(x_scale, (1.0 + std::abs(p.rhs(i))) / (1.0 + na));
    }
    const double xi = std::max({10.0, std::sqrt(n_total), n_total * x_scale});
    const double eta = std::max({10.0, std::sqrt(n_total), max_a, norm_c});

    // Gram matrix of the constraints, used to keep search directions on the
    // affine set A(x) = b when the Schur complement is badly conditioned.
    RealMatrix gram(m, m);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j <= i; ++j) {
            gram(i, j) = inner(p.constraints[static_cast<std::size_t>(i)], p.constraints[static_cast<std::size_t>(j)]);
            gram(j, i) = gram(i, j);
        }
    const Eigen::LDLT<RealMatrix> gram_ldlt(gram);

    Blocks x, s;
    for (Index n : p.block_sizes) {
        x.push_back(xi * RealMatrix::Identity(n, n));
        s.push_back(eta * RealMatrix::Identity(n, n));
    }
    RealVector y = RealVector::Zero(m);

    SdpResult result;
    const double tol = config_.gap_tol;
    const double tau = config_.step_fraction;
    Metrics met = measure(p, x, y, s, norm_b, norm_c);

    // The returned point is the best one seen; late iterations on degenerate
    // problems can lose feasibility to roundoff.
    Blocks best_x = x, best_s = s;
    RealVector best_y = y;
    double best_worst = std::numeric_limits<double>::infinity();
    int stalled = 0;

    int iter = 0;
    for (; iter < config_.max_iter; ++iter) {
        met = measure(p, x, y, s, norm_b, norm_c);
        if (met.worst() < best_worst) {
            best_worst = met.worst();
            best_x = x;
            best_s = s;
            best_y = y;
            stalled = 0;
        } else if (++stalled >= 25) {
            result.message = "no progress";
            break;
        }
        if (met.worst() <= tol) {
            result.status = SolverStatus::optimal;
            break;
        }
        double size = frob(x) + y.norm();
        if (!std::isfinite(size) || size > 1e12) {
            result.status = SolverStatus::infeasible_numeric;
            result.message = "iterates diverged";
            break;
        }

        const double mu = inner(x, s) / n_total;

        Blocks sinv(nb);
        bool ok = true;
        for (std::size_t b = 0; b < nb; ++b) {
            Eigen::LLT<RealMatrix> llt(s[b]);
            if (llt.info() != Eigen::Success) {
                ok = false;
                break;
            }
            sinv[b] = llt.solve(RealMatrix::Identity(s[b].rows(), s[b].cols()));
        }
        if (!ok) {
            result.message = "dual slack lost positive definiteness";
            break;
        }

        // Schur complement M_ij = sum_b <A_ib, X_b A_jb S_b^{-1}>.
        RealMatrix schur(m, m);
        for (Index j = 0; j < m; ++j) {
            Blocks g(nb);
            const auto &aj = p.constraints[static_cast<std::size_t>(j)];
            for (std::size_t b = 0; b < nb; ++b) {
                if (aj[b].size() != 0) g[b] = x[b] * aj[b] * sinv[b];
            }
            for (Index i = 0; i <= j; ++i) {
                const double v = inner(p.constraints[static_cast<std::size_t>(i)], g);
                schur(i, j) = v;
                schur(j, i) = v;
            }
        }
        Eigen::LDLT<RealMatrix> ldlt(schur);
        if (ldlt.info() != Eigen::Success) {
            result.message = "Schur complement factorization failed";
            break;
        }

        Blocks rd = apply_at(p, y);
        for (std::size_t b = 0; b < nb; ++b) rd[b] = p.cost[b] - rd[b] - s[b];

        // X Rd S^{-1}, shared by both solves.
        Blocks xrs(nb);
        for (std::size_t b = 0; b < nb; ++b) xrs[b] = x[b] * rd[b] * sinv[b];
        const RealVector base_rhs = p.rhs + apply_a(p, xrs);

        auto direction = [&](double sigma_mu, const Blocks *corr, Blocks &dx, RealVector &dy, Blocks &ds) {
            RealVector rhs = base_rhs - sigma_mu * apply_a(p, sinv);
            Blocks extra;
            if (corr != nullptr) {
                extra = *corr;
                rhs += apply_a(p, extra);
            }
            dy = ldlt.solve(rhs);
            for (int refine = 0; refine < 2; ++refine) dy += ldlt.solve(rhs - schur * dy);
            ds = apply_at(p, dy);
            for (std::size_t b = 0; b < nb; ++b) ds[b] = rd[b] - ds[b];
            dx.assign(nb, RealMatrix());
            for (std::size_t b = 0; b < nb; ++b) {
                RealMatrix t = x[b] * ds[b];
                if (corr != nullptr) t += (*corr)[b] * s[b]; // corr = dXa dSa S^{-1}, undo the S^{-1}
                dx[b] = sigma_mu * sinv[b] - x[b] - t * sinv[b];
            }
            symmetrize(dx);
            const RealVector miss = p.rhs - apply_a(p, x) - apply_a(p, dx);
            const Blocks fix = apply_at(p, gram_ldlt.solve(miss));
            for (std::size_t b = 0; b < nb; ++b) dx[b] += fix[b];
        };

        // Predictor.
        Blocks dx_a, ds_a;
        RealVector dy_a;
        direction(0.0, nullptr, dx_a, dy_a, ds_a);
        const double ap_a = std::min(1.0, tau * max_step(x, dx_a));
        const double ad_a = std::min(1.0, tau * max_step(s, ds_a));
        Blocks xa(nb), sa(nb);
        for (std::size_t b = 0; b < nb; ++b) {
            xa[b] = x[b] + ap_a * dx_a[b];
            sa[b] = s[b] + ad_a * ds_a[b];
        }
        const double mu_a = inner(xa, sa) / n_total;
        const double sigma = std::clamp(std::pow(mu_a / mu, 3.0), 0.0, 1.0);

        // Corrector.
        Blocks corr(nb);
        for (std::size_t b = 0; b < nb; ++b) corr[b] = dx_a[b] * ds_a[b] * sinv[b];
        Blocks dx, ds;
        RealVector dy;
        direction(sigma * mu, &corr, dx, dy, ds);

        const double ap = std::min(1.0, tau * max_step(x, dx));
        const double ad = std::min(1.0, tau * max_step(s, ds));
        if (ap < 1e-12 && ad < 1e-12) {
            result.message = "step length collapsed";
            break;
        }
        for (std::size_t b = 0; b < nb; ++b) {
            x[b] += ap * dx[b];
            s[b] += ad * ds[b];
        }
        y += ad * dy;
    }

    if (result.status != SolverStatus::optimal && result.status != SolverStatus::infeasible_numeric) {
        x = std::move(best_x);
        s = std::move(best_s);
        y = std::move(best_y);
    }
    met = measure(p, x, y, s, norm_b, norm_c);
    if (result.status != SolverStatus::optimal && result.status != SolverStatus::infeasible_numeric) {
        if (met.worst() <= tol) {
            result.status = SolverStatus::optimal;
        } else if (met.worst() <= config_.near_factor * tol) {
            result.status = SolverStatus::near_optimal;
        } else {
            result.status = SolverStatus::failed;
            if (result.message.empty()) result.message = "iteration limit reached";
        }
    }
    result.x = std::move(x);
    result.y = std::move(y);
    result.s = std::move(s);
    result.primal_objective = met.pobj;
    result.dual_objective = met.dobj;
    result.relative_gap = met.gap;
    result.primal_infeasibility = met.pinf;
    result.dual_infeasibility = met.dinf;
    result.iterations = iter;
    return result;
}

} // namespace imkit
