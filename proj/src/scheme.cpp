#include "kdv/scheme.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace kdv {

namespace {

constexpr double kBlowUpLimit = 1e6;

} // namespace

SystemMatrix::SystemMatrix(const Discretization& disc, const FeedbackLaw& law)
    : disc_(disc), law_(law) {
    if (law.h != disc.h) {
        std::ostringstream msg;
        msg << "feedback delay (" << law.h << ") does not match the grid delay ("
            << disc.h << ")";
        throw DimensionMismatch(msg.str());
    }

    const int J = disc.J;
    const int K = disc.K;
    const int ny = J - 2;
    const int n = ny + K;
    const double dt = disc.dt;
    const double dx = disc.dx;
    const double dx3 = dx * dx * dx;

    const double a1 = 1.0 + 3.0 * dt / dx3;
    const double a2 = -3.0 * dt / dx3 + dt / (2.0 * dx);
    const double a3 = dt / dx3;
    const double a4 = -dt / dx3 - dt / (2.0 * dx);

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(4 * ny + 2 * K + 4));

    // Stencil row for unknown y_j, coefficients on y_{j-1}, y_j, y_{j+1},
    // y_{j+2}. References to y_0 and y_J vanish (Dirichlet). References to
    // y_{J-1} are eliminated through the Neumann reconstruction
    // y_{J-1} = -alpha*y_1 - beta*dx*z_K: the a3 slot contributes
    // -alpha*a3 and -beta*dx*a3, the a2 slot -alpha*a2 and -beta*dx*a2,
    // written out in closed form so each entry carries one rounding.
    const int z_K_col = ny + K - 1;
    for (int j = 1; j <= ny; ++j) {
        const int r = j - 1;
        if (j - 1 >= 1) trip.emplace_back(r, j - 2, a4);
        trip.emplace_back(r, j - 1, a1);
        if (j + 1 <= ny) {
            trip.emplace_back(r, j, a2);
        } else if (j + 1 == J - 1) {
            trip.emplace_back(r, 0, 3.0 * law.alpha * dt / dx3 -
                                        law.alpha * dt / (2.0 * dx));
            trip.emplace_back(r, z_K_col,
                              3.0 * law.beta * dt / (dx * dx) - law.beta * dt / 2.0);
        }
        if (j + 2 <= ny) {
            trip.emplace_back(r, j + 1, a3);
        } else if (j + 2 == J - 1) {
            trip.emplace_back(r, 0, -law.alpha * dt / dx3);
            trip.emplace_back(r, z_K_col, -law.beta * dt / (dx * dx));
        }
    }

    // Implicit upwind transport: (1 + dt/(h*drho)) z_i - dt/(h*drho) z_{i-1},
    // with the inflow z_0 = y_1/dx coupling row z_1 to column y_1.
    const double c = dt / (disc.h * disc.drho);
    for (int i = 1; i <= K; ++i) {
        const int r = ny + i - 1;
        trip.emplace_back(r, r, 1.0 + c);
        if (i == 1) {
            trip.emplace_back(r, 0, -dt / (disc.h * dx * disc.drho));
        } else {
            trip.emplace_back(r, r - 1, -c);
        }
    }

    A_.resize(n, n);
    A_.setFromTriplets(trip.begin(), trip.end());
    A_.makeCompressed();

    lu_.compute(A_);
    if (lu_.info() != Eigen::Success) {
        throw SingularMatrix("implicit-step matrix factorization failed: " +
                             lu_.lastErrorMessage());
    }
}

Eigen::VectorXd SystemMatrix::solve(const Eigen::VectorXd& rhs) const {
    if (rhs.size() != A_.rows()) {
        std::ostringstream msg;
        msg << "right-hand side has " << rhs.size() << " entries, matrix is "
            << A_.rows() << "x" << A_.cols();
        throw DimensionMismatch(msg.str());
    }
    return lu_.solve(rhs);
}

SystemMatrix assemble_system_matrix(const Discretization& disc,
                                    const FeedbackLaw& law) {
    return SystemMatrix(disc, law);
}

Eigen::VectorXd pack_unknowns(const State& s, const Discretization& disc) {
    const int ny = disc.J - 2;
    Eigen::VectorXd u(ny + disc.K);
    u.head(ny) = s.y.segment(1, ny);
    u.tail(disc.K) = s.z.tail(disc.K);
    return u;
}

namespace {

State unpack_and_reconstruct(const SystemMatrix& sm, const Eigen::VectorXd& u,
                             double t_new) {
    const Discretization& d = sm.disc();
    const FeedbackLaw& law = sm.law();
    const int ny = d.J - 2;

    State out;
    out.t = t_new;
    out.y = Eigen::VectorXd::Zero(d.J + 1);
    out.z = Eigen::VectorXd::Zero(d.K + 1);
    out.y.segment(1, ny) = u.head(ny);
    out.z.tail(d.K) = u.tail(d.K);
    out.y[d.J - 1] = -law.alpha * out.y[1] - law.beta * d.dx * out.z[d.K];
    out.z[0] = out.y[1] / d.dx;
    out.pre_compatibility = false;
    return out;
}

} // namespace

State step_linear(const SystemMatrix& sm, const State& s) {
    require_conforming(s, sm.disc());
    const Eigen::VectorXd u = sm.solve(pack_unknowns(s, sm.disc()));
    return unpack_and_reconstruct(sm, u, s.t + sm.disc().dt);
}

State step_nonlinear(const SystemMatrix& sm, const State& s) {
    require_conforming(s, sm.disc());
    const Discretization& d = sm.disc();
    const int ny = d.J - 2;

    Eigen::VectorXd rhs = pack_unknowns(s, d);
    // Lagged advection y*Dy with the centered difference, using the full y
    // vector so that j = J-2 sees the reconstructed y_{J-1}.
    for (int j = 1; j <= ny; ++j) {
        const double dyj = (s.y[j + 1] - s.y[j - 1]) / (2.0 * d.dx);
        rhs[j - 1] -= d.dt * s.y[j] * dyj;
    }

    State out = unpack_and_reconstruct(sm, sm.solve(rhs), s.t + d.dt);
    for (int j = 0; j <= d.J; ++j) {
        if (!std::isfinite(out.y[j]) || std::abs(out.y[j]) > kBlowUpLimit) {
            std::ostringstream msg;
            msg << "solution blew up at t = " << out.t << ": |y[" << j
                << "]| = " << std::abs(out.y[j])
                << " (explicit advection term violated its step-size guideline "
                   "dt <= dx/(4*max|y|))";
            throw BlowUp(msg.str());
        }
    }
    return out;
}

double boundary_trace(const State& s, const Discretization& disc) {
    return s.y[1] / disc.dx;
}

} // namespace kdv
