#pragma once

#include <optional>
#include <vector>

#include "kdv/lattice.hpp"

namespace kdv {

/// One recorded point of a trajectory.
struct EnergySample {
    double t = 0;
    double E = 0;                ///< energy (always >= 0)
    std::optional<double> V;     ///< Lyapunov value, when mu1/mu2 were supplied
    double trace = 0;            ///< y_x(0,t)
};

/// Result of a log-linear decay fit: E(t) ~ kappa * exp(-nu*t).
struct DecayFit {
    double nu = 0;     ///< fitted exponential rate per unit time
    double kappa = 0;  ///< fitted prefactor exp(intercept)
    double r2 = 0;     ///< coefficient of determination, in [0,1]
    double t_lo = 0;   ///< requested window
    double t_hi = 0;
    int n_used = 0;    ///< samples that entered the fit
    bool truncated = false; ///< the window hit E <= 0 and was cut short
};

/// Discrete energy: trapezoid rule for the spatial integral of y^2 plus
/// |beta|*h times right-endpoint rectangles for the delay integral of z^2.
/// The right-endpoint choice matches the upwind transport grid and keeps
/// the value nonnegative.
double energy(const State& s, const FeedbackLaw& law, const Discretization& disc);

/// Lyapunov functional: energy plus mu1 * integral of x*y^2 plus
/// mu2 * h * integral of (1-rho)*z^2, same quadratures as energy().
/// Requires mu1 > 0 and mu2 in (0,1), else InvalidLyapunovParams.
double lyapunov(const State& s, const FeedbackLaw& law, const Discretization& disc,
                double mu1, double mu2);

/// Least-squares line through (t, ln E) over samples with t in
/// [t_lo, t_hi]. If E <= 0 occurs inside the window the fit uses the
/// prefix before the first such sample and sets `truncated`.
/// Throws InsufficientSamples when fewer than 10 usable samples remain.
DecayFit fit_decay_rate(const std::vector<EnergySample>& series,
                        double t_lo, double t_hi);

} // namespace kdv
