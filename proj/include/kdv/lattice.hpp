#pragma once

#include <Eigen/Core>

#include <functional>

#include "kdv/errors.hpp"

namespace kdv {

/// Grid geometry for the coupled system: the wave profile lives on
/// x_j = j*dx, j = 0..J, the delay line on rho_i = i*drho, i = 0..K.
/// Steps are adjusted at construction so that J*dx = L and K*drho = h
/// hold exactly.
struct Discretization {
    double L = 0;    ///< length of the spatial domain
    double T = 0;    ///< final time
    double h = 0;    ///< delay
    double dx = 0;   ///< space step (recomputed as L/J)
    double dt = 0;   ///< time step (kept as given)
    double drho = 0; ///< delay-variable step (recomputed as h/K)
    int J = 0;       ///< number of space steps, J = L/dx
    int K = 0;       ///< number of delay steps, K = h/drho
    int Nt = 0;      ///< number of time steps, Nt = round(T/dt), at least 1
};

/// Boundary feedback y_x(L,t) = alpha*y_x(0,t) + beta*y_x(0,t-h).
/// No admissibility constraint is enforced here: inadmissible laws must
/// still be simulatable (to exhibit non-decay). Admissibility is a
/// certificates query.
struct FeedbackLaw {
    double alpha = 0;
    double beta = 0;
    double h = 0;

    FeedbackLaw() = default;
    FeedbackLaw(double alpha_, double beta_, double delay);
};

/// The coupled unknown at one time level.
///
/// Invariants (re-imposed after every step):
///   y[0] = y[J] = 0                         (Dirichlet)
///   z[0] = y[1]/dx                          (trace coupling)
///   y[J-1] = -alpha*y[1] - beta*dx*z[K]     (Neumann reconstruction)
///
/// Initial data carries no compatibility condition, so the Neumann
/// reconstruction is not imposed at t = 0; `pre_compatibility` marks
/// that state and is cleared by the first step.
struct State {
    double t = 0;
    Eigen::VectorXd y; ///< length J+1
    Eigen::VectorXd z; ///< length K+1
    bool pre_compatibility = false;
};

/// Rounds J = L/dx and K = h/drho to integers, recomputes dx and drho to
/// divide exactly, and sets Nt = round(T/dt) (at least 1).
///
/// Throws NonPositiveParameter if any argument is not strictly positive,
/// GridTooCoarse if J < 4 after rounding (the interior stencil needs two
/// unknowns plus two reconstructed neighbors).
Discretization build_discretization(double L, double T, double h,
                                    double dx, double dt, double drho);

/// Samples y0 on the space grid and z0 on the delay grid, then imposes
/// the Dirichlet zeros and the trace coupling (z0(0) is overridden by
/// y[1]/dx). The Neumann reconstruction is deliberately left alone at
/// t = 0; the returned state has pre_compatibility = true.
///
/// Throws IncompatibleDirichletData if y0 is nonzero at an endpoint
/// beyond 1e-9.
State sample_initial_state(const Discretization& disc,
                           const std::function<double(double)>& y0,
                           const std::function<double(double)>& z0);

/// Checks the three State invariants to `rel_tol` relative accuracy,
/// skipping the Neumann reconstruction when pre_compatibility is set.
bool check_state_invariants(const State& s, const Discretization& disc,
                            const FeedbackLaw& law, double rel_tol = 1e-12);

/// Throws DimensionMismatch unless s.y has J+1 and s.z has K+1 entries.
void require_conforming(const State& s, const Discretization& disc);

} // namespace kdv
