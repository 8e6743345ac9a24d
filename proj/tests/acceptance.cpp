// Acceptance suite: every release gate in one binary, one pass/fail line
// per criterion. Run with no arguments for all criteria, or pass criterion
// numbers to run a subset. Exit code is the number of failures.

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kdv/analysis.hpp"
#include "kdv/certificates.hpp"
#include "kdv/runner.hpp"
#include "kdv/scheme.hpp"
#include "dense_oracle.hpp"
#include "test_support.hpp"

using namespace kdv;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Criterion {
    int number;
    const char* title;
    std::function<bool(std::ostream&)> body;
};

Discretization paper_grid() {
    return build_discretization(1, 1, 1, 0.01, 0.001, 0.001);
}

State paper_initial(const Discretization& d, double h) {
    return sample_initial_state(
        d, [](double x) { return 1.0 - std::cos(kTwoPi * x); },
        [h](double rho) { return 0.1 * std::sin(-kTwoPi * rho * h); });
}

bool check(std::ostream& log, bool ok, const std::string& what) {
    if (!ok) log << "    FAILED: " << what << "\n";
    return ok;
}

// ---------------------------------------------------------------------------
// 1. Matrix fidelity: assembled entries equal their closed forms (<= 1 ulp of
//    the forms evaluated here; the quoted decimals hold up to the binary
//    representation of dt and dx, checked at 1e-12 relative).
bool criterion_matrix_fidelity(std::ostream& log) {
    const Discretization d = paper_grid();
    const FeedbackLaw law(0.5, 0.2, 1.0);
    const Eigen::MatrixXd A = Eigen::MatrixXd(SystemMatrix(d, law).matrix());
    const int ny = d.J - 2;
    const double dt = d.dt, dx = d.dx, dx3 = dx * dx * dx;
    const double alpha = law.alpha;

    bool ok = true;
    auto entry = [&](double got, double closed_form, double decimal,
                     const char* name) {
        std::ostringstream msg;
        msg << name << ": got " << got << ", closed form " << closed_form
            << ", quoted " << decimal;
        ok &= check(log,
                    testing::within_ulps(got, closed_form) &&
                        std::abs(got - decimal) <= 1e-12 * std::abs(decimal),
                    msg.str());
    };
    entry(A(5, 5), 1.0 + 3.0 * dt / dx3, 3001.0, "a1");
    entry(A(5, 6), -3.0 * dt / dx3 + dt / (2.0 * dx), -2999.95, "a2");
    entry(A(5, 7), dt / dx3, 1000.0, "a3");
    entry(A(5, 4), -dt / dx3 - dt / (2.0 * dx), -1000.05, "a4");
    entry(A(ny - 2, 0), -alpha * dt / dx3, -500.0, "alpha corner (row J-3)");
    entry(A(ny - 1, 0), 3.0 * alpha * dt / dx3 - alpha * dt / (2.0 * dx),
          1499.975, "alpha corner (row J-2)");
    entry(A(ny, ny), 1.0 + dt / (d.h * d.drho), 2.0, "transport diagonal");
    entry(A(ny + 1, ny), -dt / (d.h * d.drho), -1.0, "transport subdiagonal");
    entry(A(ny, 0), -dt / (d.h * dx * d.drho), -100.0, "trace inflow");
    return ok;
}

// ---------------------------------------------------------------------------
// 2. Oracle equivalence: sparse step vs dense Gaussian elimination, 1e-12.
bool criterion_oracle_equivalence(std::ostream& log) {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> coef(-0.45, 0.45);
    bool ok = true;
    for (int J : {6, 8, 10}) {
        for (int K : {2, 4}) {
            const Discretization d =
                build_discretization(1, 0.1, 1, 1.0 / J, 0.01, 1.0 / K);
            const FeedbackLaw law(coef(rng), coef(rng), 1.0);
            const SystemMatrix sm(d, law);
            double worst = 0;
            for (int trial = 0; trial < 100; ++trial) {
                const State s = testing::random_state(d, law, rng);
                const State got = step_linear(sm, s);
                const State want = oracle::step_linear_dense(d, law, s);
                const double scale = want.y.cwiseAbs().maxCoeff() +
                                     want.z.cwiseAbs().maxCoeff() + 1.0;
                worst = std::max(worst,
                                 std::max((got.y - want.y).cwiseAbs().maxCoeff(),
                                          (got.z - want.z).cwiseAbs().maxCoeff()) /
                                     scale);
            }
            std::ostringstream msg;
            msg << "J=" << J << " K=" << K << ": worst relative gap " << worst;
            ok &= check(log, worst <= 1e-12, msg.str());
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 3. Discrete dissipation over the full reference run, three feedback pairs.
bool criterion_dissipation(std::ostream& log) {
    bool ok = true;
    for (const auto& [alpha, beta] : std::vector<std::pair<double, double>>{
             {0.5, 0.2}, {0.0, 0.4}, {0.0, 0.0}}) {
        const Discretization d = paper_grid();
        const FeedbackLaw law(alpha, beta, 1.0);
        const SystemMatrix sm(d, law);
        State s = paper_initial(d, d.h);
        const double E0 = energy(s, law, d);
        double prev = E0;
        bool monotone = true;
        for (int n = 1; n <= d.Nt; ++n) {
            s = step_linear(sm, s);
            const double cur = energy(s, law, d);
            if (cur > prev * (1.0 + 1e-10)) {
                monotone = false;
                std::ostringstream msg;
                msg << "alpha=" << alpha << " beta=" << beta << ": E rose at step "
                    << n << " (" << prev << " -> " << cur << ")";
                check(log, false, msg.str());
                break;
            }
            prev = cur;
        }
        ok &= monotone;
        std::ostringstream msg;
        msg << "alpha=" << alpha << " beta=" << beta << ": E(T)/E(0) = "
            << prev / E0;
        ok &= check(log, prev < 0.99 * E0, msg.str());
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 4. Figure reproduction: fitted rates fall as h grows and as |beta| grows.
bool criterion_figure_trends(std::ostream& log) {
    const std::string base_text =
        "L = 1\nT = 1\nh = 1\nalpha = 0.5\nbeta = 0.2\ndx = 0.01\ndt = 0.001\n"
        "drho = 0.001\n";
    const RunConfig base = parse_config(base_text);
    bool ok = true;

    const std::vector<SweepRow> by_h = sweep(base, SweepAxis::h, {0.5, 1.0, 2.0});
    for (const SweepRow& r : by_h) {
        ok &= check(log, r.error.empty(), "h sweep value failed: " + r.error);
    }
    for (std::size_t i = 0; i + 1 < by_h.size(); ++i) {
        std::ostringstream msg;
        msg << "nu(h=" << by_h[i].value << ") = " << by_h[i].nu
            << " not above nu(h=" << by_h[i + 1].value << ") = " << by_h[i + 1].nu;
        ok &= check(log, by_h[i].nu > by_h[i + 1].nu, msg.str());
    }
    log << "    nu by h {0.5, 1, 2}: " << by_h[0].nu << ", " << by_h[1].nu << ", "
        << by_h[2].nu << "\n";

    const std::vector<SweepRow> by_beta =
        sweep(base, SweepAxis::beta, {0.0, 0.2, 0.4});
    for (const SweepRow& r : by_beta) {
        ok &= check(log, r.error.empty(), "beta sweep value failed: " + r.error);
    }
    for (std::size_t i = 0; i + 1 < by_beta.size(); ++i) {
        std::ostringstream msg;
        msg << "nu(beta=" << by_beta[i].value << ") = " << by_beta[i].nu
            << " not above nu(beta=" << by_beta[i + 1].value
            << ") = " << by_beta[i + 1].nu;
        ok &= check(log, by_beta[i].nu > by_beta[i + 1].nu, msg.str());
    }
    log << "    nu by beta {0, 0.2, 0.4}: " << by_beta[0].nu << ", "
        << by_beta[1].nu << ", " << by_beta[2].nu << "\n";
    return ok;
}

// ---------------------------------------------------------------------------
// 5. Certificate region: definiteness of M and M~ matches admissibility on a
//    200x200 grid away from the boundary of the region.
bool criterion_certificate_region(std::ostream& log) {
    const int n = 200;
    int checked = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double a = -1.5 + 3.0 * i / (n - 1.0);
            const double b = -1.5 + 3.0 * j / (n - 1.0);
            if (b == 0.0) continue;
            if (std::abs(std::abs(a) + std::abs(b) - 1.0) <= 1e-6) continue;
            ++checked;
            const bool adm = is_admissible(a, b);
            if (is_negative_definite(boundary_matrix_M(a, b)) != adm ||
                is_negative_definite(boundary_matrix_M_tilde(a, b)) != adm) {
                std::ostringstream msg;
                msg << "mismatch at alpha=" << a << ", beta=" << b;
                return check(log, false, msg.str());
            }
        }
    }
    log << "    " << checked << " grid points agree\n";
    return true;
}

// ---------------------------------------------------------------------------
// 6. Remark-3 soundness: halved bounds certify M_mu for random admissible
//    triples.
bool criterion_mu_soundness(std::ostream& log) {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> len(1e-3, std::sqrt(3.0) * kPi - 1e-9);
    int done = 0;
    while (done < 100) {
        const double a = unit(rng), b = unit(rng);
        if (b == 0.0 || !is_admissible(a, b)) continue;
        const double L = len(rng);
        const Remark3Bounds bounds = remark3_bounds(a, b, L);
        const double mu2 = bounds.mu2_max / 2.0;
        const double mu1 = bounds.mu1_max(mu2) / 2.0;
        if (!is_negative_definite(boundary_matrix_Mmu(a, b, L, mu1, mu2))) {
            std::ostringstream msg;
            msg << "not negative definite at alpha=" << a << ", beta=" << b
                << ", L=" << L << " (mu1=" << mu1 << ", mu2=" << mu2 << ")";
            return check(log, false, msg.str());
        }
        ++done;
    }
    log << "    100 random admissible triples certified\n";
    return true;
}

// ---------------------------------------------------------------------------
// 7. Decay envelope: a certified small-data nonlinear run stays below
//    ln(kappa E(0)) - 2 gamma t + 0.1.
bool criterion_decay_envelope(std::ostream& log) {
    const double alpha = 0.5, beta = 0.2, L = 1.0, h = 1.0;
    const Discretization d = paper_grid();
    const FeedbackLaw law(alpha, beta, h);

    const double r_max = smallness_radius(L);
    const double r = r_max / 2.0;

    State s = paper_initial(d, h);
    const double norm0 = std::sqrt(energy(s, law, d));
    const double scale = r / norm0;
    s.y *= scale;
    s.z *= scale;
    s.z[0] = s.y[1] / d.dx;

    const Remark3Bounds bounds = remark3_bounds(alpha, beta, L);
    const double mu2 = bounds.mu2_max / 2.0;
    const double mu1 = bounds.mu1_max(mu2) / 2.0;
    const double gamma = gamma_bound(L, r, mu1, mu2, beta, h, true) * 0.999;
    const double kappa = 1.0 + std::max(L * mu1, mu2 / std::abs(beta));

    const SystemMatrix sm(d, law);
    const std::vector<EnergySample> samples =
        simulate(sm, std::move(s), d.Nt, Equation::nonlinear, 1, std::nullopt);

    const double E0 = samples.front().E;
    log << "    E(0) = " << E0 << " (|(y,z)|_H = " << std::sqrt(E0)
        << ", target r = " << r << "), gamma = " << gamma << ", kappa = " << kappa
        << "\n";
    for (const EnergySample& sample : samples) {
        const double envelope = std::log(kappa * E0) - 2.0 * gamma * sample.t + 0.1;
        if (!(std::log(sample.E) <= envelope)) {
            std::ostringstream msg;
            msg << "ln E(" << sample.t << ") = " << std::log(sample.E)
                << " exceeds the envelope " << envelope;
            return check(log, false, msg.str());
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 8. Critical lengths: witnesses, rejections and completeness below 100.
bool criterion_critical_lengths(std::ostream& log) {
    bool ok = true;

    const CriticalLengthHit first = is_critical_length(kTwoPi, 1e-9);
    ok &= check(log, first.critical && first.k == 1 && first.l == 1,
                "2*pi should be critical with witness (1,1)");
    const CriticalLengthHit second =
        is_critical_length(kTwoPi * std::sqrt(7.0 / 3.0), 1e-9);
    ok &= check(log, second.critical && second.k == 1 && second.l == 2,
                "2*pi*sqrt(7/3) should be critical with witness (1,2)");

    for (double L : {1.0, 4.0, std::sqrt(3.0) * kPi}) {
        std::ostringstream msg;
        msg << "L = " << L << " should not be critical";
        ok &= check(log, !is_critical_length(L, 1e-9).critical, msg.str());
    }

    const auto members = critical_lengths_below(100.0);
    for (const CriticalLength& c : members) {
        if (!is_critical_length(c.value, 1e-9).critical) {
            std::ostringstream msg;
            msg << "member " << c.value << " (k=" << c.k << ", l=" << c.l
                << ") not detected";
            ok &= check(log, false, msg.str());
        }
    }
    log << "    " << members.size() << " distinct members below 100 all detected\n";
    return ok;
}

// ---------------------------------------------------------------------------
// 9. Decay-fit exactness on synthetic data.
bool criterion_fit_exactness(std::ostream& log) {
    std::vector<EnergySample> series;
    for (int i = 0; i < 100; ++i) {
        const double t = i * 0.01;
        series.push_back({t, 2.0 * std::exp(-3.0 * t), std::nullopt, 0.0});
    }
    const DecayFit fit = fit_decay_rate(series, 0.0, 1.0);
    bool ok = true;
    std::ostringstream msg;
    msg << "nu = " << fit.nu << ", kappa = " << fit.kappa << ", r2 = " << fit.r2;
    ok &= check(log, std::abs(fit.nu - 3.0) <= 1e-10, "nu: " + msg.str());
    ok &= check(log, std::abs(fit.kappa - 2.0) <= 1e-10, "kappa: " + msg.str());
    ok &= check(log, std::abs(fit.r2 - 1.0) <= 1e-10, "r2: " + msg.str());
    return ok;
}

const std::vector<Criterion> kCriteria = {
    {1, "matrix fidelity at the reference parameters", criterion_matrix_fidelity},
    {2, "sparse step equals the dense elimination oracle", criterion_oracle_equivalence},
    {3, "discrete energy dissipation on the reference run", criterion_dissipation},
    {4, "fitted decay rates fall as h and |beta| grow", criterion_figure_trends},
    {5, "negative definiteness matches admissibility on a grid", criterion_certificate_region},
    {6, "halved mu bounds certify the perturbed matrix", criterion_mu_soundness},
    {7, "certified envelope bounds the nonlinear small-data run", criterion_decay_envelope},
    {8, "critical lengths detected with witnesses, others rejected", criterion_critical_lengths},
    {9, "decay fit recovers exact synthetic data", criterion_fit_exactness},
};

} // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : kCriteria) {
        if (!selected.empty() && !selected.count(c.number)) continue;
        std::ostringstream log;
        bool ok = false;
        try {
            ok = c.body(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.number
                  << ": " << c.title << "\n"
                  << log.str();
        if (!ok) ++failures;
    }
    return failures;
}
