#include "kdv/runner.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace kdv {

SweepAxis parse_sweep_axis(const std::string& name) {
    if (name == "h") return SweepAxis::h;
    if (name == "beta") return SweepAxis::beta;
    if (name == "alpha") return SweepAxis::alpha;
    if (name == "L") return SweepAxis::L;
    throw ValidationError("unknown sweep axis '" + name +
                          "' (expected h, beta, alpha or L)");
}

std::string sweep_axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::h: return "h";
        case SweepAxis::beta: return "beta";
        case SweepAxis::alpha: return "alpha";
        case SweepAxis::L: return "L";
    }
    return "?";
}

namespace {

State load_initial_state(const std::string& path, const Discretization& disc) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read initial-state file '" + path + "'");
    }

    State s;
    s.t = 0.0;
    s.y = Eigen::VectorXd::Zero(disc.J + 1);
    s.z = Eigen::VectorXd::Zero(disc.K + 1);

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (line_no == 1 && line.rfind("field", 0) == 0) continue;
        std::istringstream row(line);
        std::string field, index_str, value_str;
        if (!std::getline(row, field, ',') || !std::getline(row, index_str, ',') ||
            !std::getline(row, value_str)) {
            std::ostringstream msg;
            msg << path << ":" << line_no << ": expected 'field,index,value'";
            throw ParseError(msg.str());
        }
        int index = 0;
        double value = 0;
        try {
            index = std::stoi(index_str);
            value = std::stod(value_str);
        } catch (const std::exception&) {
            std::ostringstream msg;
            msg << path << ":" << line_no << ": bad index or value";
            throw ParseError(msg.str());
        }
        if (field == "y") {
            if (index < 0 || index > disc.J) {
                std::ostringstream msg;
                msg << path << ":" << line_no << ": y index " << index
                    << " outside 0.." << disc.J;
                throw ValidationError(msg.str());
            }
            s.y[index] = value;
        } else if (field == "z") {
            if (index < 0 || index > disc.K) {
                std::ostringstream msg;
                msg << path << ":" << line_no << ": z index " << index
                    << " outside 0.." << disc.K;
                throw ValidationError(msg.str());
            }
            s.z[index] = value;
        } else {
            std::ostringstream msg;
            msg << path << ":" << line_no << ": field must be 'y' or 'z'";
            throw ParseError(msg.str());
        }
    }

    if (std::abs(s.y[0]) > 1e-9 || std::abs(s.y[disc.J]) > 1e-9) {
        throw IncompatibleDirichletData(
            "initial-state file violates the Dirichlet endpoints");
    }
    s.y[0] = 0.0;
    s.y[disc.J] = 0.0;
    s.z[0] = s.y[1] / disc.dx;
    s.pre_compatibility = true;
    return s;
}

EnergySample record_sample(const State& s, const FeedbackLaw& law,
                           const Discretization& disc,
                           const std::optional<std::pair<double, double>>& mu) {
    EnergySample sample;
    sample.t = s.t;
    sample.E = energy(s, law, disc);
    if (mu) sample.V = lyapunov(s, law, disc, mu->first, mu->second);
    sample.trace = boundary_trace(s, disc);
    return sample;
}

} // namespace

State make_initial_state(const RunConfig& cfg, const Discretization& disc) {
    switch (cfg.initial) {
        case InitialKind::zero:
            return sample_initial_state(
                disc, [](double) { return 0.0; }, [](double) { return 0.0; });
        case InitialKind::file:
            return load_initial_state(cfg.initial_file, disc);
        case InitialKind::paper_default:
        default: {
            const double two_pi = 2.0 * std::numbers::pi;
            const double h = cfg.h;
            return sample_initial_state(
                disc, [two_pi](double x) { return 1.0 - std::cos(two_pi * x); },
                [two_pi, h](double rho) { return 0.1 * std::sin(-two_pi * rho * h); });
        }
    }
}

std::vector<EnergySample> simulate(const SystemMatrix& sm, State s, int n_steps,
                                   Equation eq, int sample_every,
                                   const std::optional<std::pair<double, double>>& mu) {
    if (sample_every < 1) {
        throw ValidationError("sample_every must be at least 1");
    }
    const FeedbackLaw& law = sm.law();
    const Discretization& disc = sm.disc();

    std::vector<EnergySample> samples;
    samples.reserve(static_cast<std::size_t>(n_steps / sample_every) + 2);
    samples.push_back(record_sample(s, law, disc, mu));

    for (int n = 1; n <= n_steps; ++n) {
        try {
            s = (eq == Equation::nonlinear) ? step_nonlinear(sm, s)
                                            : step_linear(sm, s);
        } catch (const BlowUp& e) {
            std::ostringstream msg;
            msg << e.what() << " [step " << n << " of " << n_steps << "]";
            throw BlowUp(msg.str());
        }
        if (n % sample_every == 0 || n == n_steps) {
            samples.push_back(record_sample(s, law, disc, mu));
        }
    }
    return samples;
}

RunResult run(const RunConfig& cfg) {
    RunResult result;
    result.notices = config_warnings(cfg);

    const Discretization disc =
        build_discretization(cfg.L, cfg.T, cfg.h, cfg.dx, cfg.dt, cfg.drho);
    const FeedbackLaw law(cfg.alpha, cfg.beta, cfg.h);

    // Resolve the Lyapunov weights. Auto mode takes half the certified
    // bounds and backs off (with a notice) when they do not exist.
    std::optional<std::pair<double, double>> mu;
    switch (cfg.lyapunov.mode) {
        case LyapunovChoice::Mode::none:
            break;
        case LyapunovChoice::Mode::explicit_params:
            mu = std::make_pair(cfg.lyapunov.mu1, cfg.lyapunov.mu2);
            break;
        case LyapunovChoice::Mode::automatic: {
            if (cfg.beta == 0.0) {
                result.notices.push_back(
                    "lyapunov omitted: beta = 0 has no delay term (use the "
                    "scalar criterion |alpha| < 1)");
            } else if (!is_admissible(cfg.alpha, cfg.beta)) {
                result.notices.push_back(
                    "lyapunov omitted: inadmissible feedback pair");
            } else if (!(cfg.L < std::sqrt(3.0) * std::numbers::pi)) {
                result.notices.push_back(
                    "lyapunov omitted: L >= sqrt(3)*pi, no certified weights");
            } else {
                const Remark3Bounds bounds =
                    remark3_bounds(cfg.alpha, cfg.beta, cfg.L);
                const double mu2 = bounds.mu2_max / 2.0;
                mu = std::make_pair(bounds.mu1_max(mu2) / 2.0, mu2);
            }
            break;
        }
    }

    const SystemMatrix sm(disc, law);
    State initial = make_initial_state(cfg, disc);
    result.samples =
        simulate(sm, std::move(initial), disc.Nt, cfg.equation, cfg.sample_every, mu);

    bool any_positive = false;
    for (const EnergySample& s : result.samples) {
        if (s.E > 0) {
            any_positive = true;
            break;
        }
    }
    if (any_positive) {
        try {
            result.fit = fit_decay_rate(result.samples, cfg.T / 2.0, cfg.T);
        } catch (const InsufficientSamples& e) {
            // Sampling too thin for the window; keep the run, skip the fit.
            const double nan = std::numeric_limits<double>::quiet_NaN();
            result.fit.nu = result.fit.kappa = result.fit.r2 = nan;
            result.fit.t_lo = cfg.T / 2.0;
            result.fit.t_hi = cfg.T;
            result.notices.push_back(std::string("decay fit skipped: ") + e.what());
        }
    } else {
        // Identically zero energy: nothing decays, the rate is zero.
        result.fit.nu = 0.0;
        result.fit.kappa = 0.0;
        result.fit.r2 = 1.0;
        result.fit.t_lo = cfg.T / 2.0;
        result.fit.t_hi = cfg.T;
        result.fit.n_used = 0;
        result.fit.truncated = true;
        result.notices.push_back("energy is identically zero; decay fit skipped");
    }

    result.report = certify(cfg.alpha, cfg.beta, cfg.L, cfg.h,
                            cfg.equation == Equation::nonlinear);
    return result;
}

std::vector<SweepRow> sweep(const RunConfig& base, SweepAxis axis,
                            const std::vector<double>& values,
                            std::vector<std::vector<EnergySample>>* series_out) {
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    if (series_out) {
        series_out->clear();
        series_out->reserve(values.size());
    }

    for (double value : values) {
        RunConfig cfg = base;
        switch (axis) {
            case SweepAxis::h: cfg.h = value; break;
            case SweepAxis::beta: cfg.beta = value; break;
            case SweepAxis::alpha: cfg.alpha = value; break;
            case SweepAxis::L: cfg.L = value; break;
        }

        SweepRow row;
        row.value = value;
        try {
            const RunResult res = run(cfg);
            row.nu = res.fit.nu;
            row.kappa = res.fit.kappa;
            row.r2 = res.fit.r2;
            if (series_out) series_out->push_back(res.samples);
        } catch (const Error& e) {
            row.nu = row.kappa = row.r2 = std::numeric_limits<double>::quiet_NaN();
            row.error = e.what();
            if (series_out) series_out->emplace_back();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace kdv
