#pragma once

#include <cmath>
#include <random>

#include "kdv/lattice.hpp"

namespace testing {

/// |a - b| within n ulps of the larger magnitude.
inline bool within_ulps(double a, double b, int n = 1) {
    if (a == b) return true;
    double lo = std::min(a, b), hi = std::max(a, b);
    for (int i = 0; i < n; ++i) {
        lo = std::nextafter(lo, hi);
        if (lo >= hi) return true;
    }
    return false;
}

inline double rel_err(double got, double want) {
    const double scale = std::max(1.0, std::abs(want));
    return std::abs(got - want) / scale;
}

/// A random state with all invariants imposed (pre_compatibility clear).
inline kdv::State random_state(const kdv::Discretization& d,
                               const kdv::FeedbackLaw& law, std::mt19937& rng,
                               double amplitude = 1.0) {
    std::uniform_real_distribution<double> dist(-amplitude, amplitude);
    kdv::State s;
    s.t = 0.0;
    s.y = Eigen::VectorXd::Zero(d.J + 1);
    s.z = Eigen::VectorXd::Zero(d.K + 1);
    for (int j = 1; j < d.J; ++j) s.y[j] = dist(rng);
    for (int i = 1; i <= d.K; ++i) s.z[i] = dist(rng);
    s.y[0] = 0.0;
    s.y[d.J] = 0.0;
    s.y[d.J - 1] = -law.alpha * s.y[1] - law.beta * d.dx * s.z[d.K];
    s.z[0] = s.y[1] / d.dx;
    s.pre_compatibility = false;
    return s;
}

} // namespace testing
