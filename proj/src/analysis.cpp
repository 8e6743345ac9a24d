#include "kdv/analysis.hpp"

#include <cmath>
#include <sstream>

namespace kdv {

double energy(const State& s, const FeedbackLaw& law, const Discretization& disc) {
    require_conforming(s, disc);

    double spatial = 0.5 * (s.y[0] * s.y[0] + s.y[disc.J] * s.y[disc.J]);
    for (int j = 1; j < disc.J; ++j) spatial += s.y[j] * s.y[j];
    spatial *= disc.dx;

    double delay = 0.0;
    for (int i = 1; i <= disc.K; ++i) delay += s.z[i] * s.z[i];
    delay *= std::abs(law.beta) * disc.h * disc.drho;

    return spatial + delay;
}

double lyapunov(const State& s, const FeedbackLaw& law, const Discretization& disc,
                double mu1, double mu2) {
    if (!(mu1 > 0) || !(mu2 > 0) || !(mu2 < 1)) {
        std::ostringstream msg;
        msg << "need mu1 > 0 and mu2 in (0,1), got mu1 = " << mu1
            << ", mu2 = " << mu2;
        throw InvalidLyapunovParams(msg.str());
    }
    require_conforming(s, disc);

    double weighted_spatial = 0.5 * disc.L * s.y[disc.J] * s.y[disc.J];
    for (int j = 1; j < disc.J; ++j) {
        weighted_spatial += (j * disc.dx) * s.y[j] * s.y[j];
    }
    weighted_spatial *= disc.dx;

    double weighted_delay = 0.0;
    for (int i = 1; i <= disc.K; ++i) {
        weighted_delay += (1.0 - i * disc.drho) * s.z[i] * s.z[i];
    }
    weighted_delay *= disc.h * disc.drho;

    return energy(s, law, disc) + mu1 * weighted_spatial + mu2 * weighted_delay;
}

DecayFit fit_decay_rate(const std::vector<EnergySample>& series,
                        double t_lo, double t_hi) {
    DecayFit fit;
    fit.t_lo = t_lo;
    fit.t_hi = t_hi;

    std::vector<double> ts;
    std::vector<double> lnEs;
    // Sample times accumulate per-step roundoff; a hair of slack keeps the
    // window's own boundary samples inside it.
    const double edge_tol = 1e-9 * std::max({1.0, std::abs(t_lo), std::abs(t_hi)});
    for (const EnergySample& sample : series) {
        if (sample.t < t_lo - edge_tol || sample.t > t_hi + edge_tol) continue;
        if (!(sample.E > 0)) {
            fit.truncated = true;
            break;
        }
        ts.push_back(sample.t);
        lnEs.push_back(std::log(sample.E));
    }

    const int n = static_cast<int>(ts.size());
    if (n < 10) {
        std::ostringstream msg;
        msg << "decay fit needs at least 10 samples with E > 0 in [" << t_lo
            << ", " << t_hi << "], got " << n
            << (fit.truncated ? " (window truncated at E <= 0)" : "");
        throw InsufficientSamples(msg.str());
    }
    fit.n_used = n;

    double t_mean = 0, e_mean = 0;
    for (int i = 0; i < n; ++i) {
        t_mean += ts[i];
        e_mean += lnEs[i];
    }
    t_mean /= n;
    e_mean /= n;

    double stt = 0, ste = 0, max_dev = 0;
    for (int i = 0; i < n; ++i) {
        stt += (ts[i] - t_mean) * (ts[i] - t_mean);
        ste += (ts[i] - t_mean) * (lnEs[i] - e_mean);
        max_dev = std::max(max_dev, std::abs(lnEs[i] - e_mean));
    }
    const double slope = stt > 0 ? ste / stt : 0.0;
    const double intercept = e_mean - slope * t_mean;

    fit.nu = -slope;
    fit.kappa = std::exp(intercept);

    // Zero-variance data (constant E up to roundoff) fits its own mean
    // perfectly; the residual ratio would be 0/0 noise.
    if (max_dev <= 1e-12 * std::max(1.0, std::abs(e_mean))) {
        fit.r2 = 1.0;
        return fit;
    }

    double ss_res = 0, ss_tot = 0;
    for (int i = 0; i < n; ++i) {
        const double r = lnEs[i] - (intercept + slope * ts[i]);
        ss_res += r * r;
        ss_tot += (lnEs[i] - e_mean) * (lnEs[i] - e_mean);
    }
    fit.r2 = 1.0 - ss_res / ss_tot;
    if (fit.r2 < 0) fit.r2 = 0;
    if (fit.r2 > 1) fit.r2 = 1;
    return fit;
}

} // namespace kdv
