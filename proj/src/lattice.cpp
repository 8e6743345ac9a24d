#include "kdv/lattice.hpp"

#include <cmath>
#include <sstream>

namespace kdv {

FeedbackLaw::FeedbackLaw(double alpha_, double beta_, double delay)
    : alpha(alpha_), beta(beta_), h(delay) {
    if (!(h > 0)) {
        throw NonPositiveParameter("feedback delay h must be positive, got " +
                                   std::to_string(h));
    }
}

Discretization build_discretization(double L, double T, double h,
                                    double dx, double dt, double drho) {
    const struct {
        const char* name;
        double value;
    } args[] = {{"L", L}, {"T", T}, {"h", h}, {"dx", dx}, {"dt", dt}, {"drho", drho}};
    for (const auto& a : args) {
        if (!(a.value > 0) || !std::isfinite(a.value)) {
            std::ostringstream msg;
            msg << a.name << " must be strictly positive, got " << a.value;
            throw NonPositiveParameter(msg.str());
        }
    }

    Discretization d;
    d.L = L;
    d.T = T;
    d.h = h;
    d.dt = dt;

    d.J = static_cast<int>(std::lround(L / dx));
    if (d.J < 4) {
        std::ostringstream msg;
        msg << "grid too coarse: L/dx rounds to J = " << d.J << ", need J >= 4";
        throw GridTooCoarse(msg.str());
    }
    d.dx = L / d.J;

    d.K = static_cast<int>(std::lround(h / drho));
    if (d.K < 1) d.K = 1;
    d.drho = h / d.K;

    d.Nt = static_cast<int>(std::lround(T / dt));
    if (d.Nt < 1) d.Nt = 1;

    return d;
}

State sample_initial_state(const Discretization& disc,
                           const std::function<double(double)>& y0,
                           const std::function<double(double)>& z0) {
    const double end_tol = 1e-9;
    if (std::abs(y0(0.0)) > end_tol || std::abs(y0(disc.L)) > end_tol) {
        std::ostringstream msg;
        msg << "initial y0 violates the Dirichlet endpoints: y0(0) = " << y0(0.0)
            << ", y0(L) = " << y0(disc.L);
        throw IncompatibleDirichletData(msg.str());
    }

    State s;
    s.t = 0.0;
    s.y = Eigen::VectorXd::Zero(disc.J + 1);
    s.z = Eigen::VectorXd::Zero(disc.K + 1);
    for (int j = 1; j < disc.J; ++j) s.y[j] = y0(j * disc.dx);
    for (int i = 1; i <= disc.K; ++i) s.z[i] = z0(i * disc.drho);
    s.y[0] = 0.0;
    s.y[disc.J] = 0.0;
    s.z[0] = s.y[1] / disc.dx;
    // y[J-1] keeps the sampled value: initial data carries no
    // compatibility condition; the first implicit step imposes it.
    s.pre_compatibility = true;
    return s;
}

namespace {

bool close_rel(double a, double b, double rel_tol) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= rel_tol * scale;
}

} // namespace

bool check_state_invariants(const State& s, const Discretization& disc,
                            const FeedbackLaw& law, double rel_tol) {
    if (s.y.size() != disc.J + 1 || s.z.size() != disc.K + 1) return false;
    if (!close_rel(s.y[0], 0.0, rel_tol)) return false;
    if (!close_rel(s.y[disc.J], 0.0, rel_tol)) return false;
    if (!close_rel(s.z[0], s.y[1] / disc.dx, rel_tol)) return false;
    if (!s.pre_compatibility) {
        const double recon = -law.alpha * s.y[1] - law.beta * disc.dx * s.z[disc.K];
        if (!close_rel(s.y[disc.J - 1], recon, rel_tol)) return false;
    }
    return true;
}

void require_conforming(const State& s, const Discretization& disc) {
    if (s.y.size() != disc.J + 1 || s.z.size() != disc.K + 1) {
        std::ostringstream msg;
        msg << "state does not conform to the grid: y has " << s.y.size()
            << " entries (want " << disc.J + 1 << "), z has " << s.z.size()
            << " (want " << disc.K + 1 << ")";
        throw DimensionMismatch(msg.str());
    }
}

} // namespace kdv
