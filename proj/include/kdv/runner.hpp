#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdv/analysis.hpp"
#include "kdv/certificates.hpp"
#include "kdv/config.hpp"
#include "kdv/csv.hpp"
#include "kdv/scheme.hpp"

namespace kdv {

enum class SweepAxis { h, beta, alpha, L };

SweepAxis parse_sweep_axis(const std::string& name);
std::string sweep_axis_name(SweepAxis axis);

/// Everything a single run produces. Pure data; nothing is written.
struct RunResult {
    std::vector<EnergySample> samples;
    DecayFit fit;
    CertificateReport report;
    std::vector<std::string> notices;
};

/// Builds the initial state a config asks for (paper_default samples
/// y0(x) = 1 - cos(2 pi x) and z0(rho) = 0.1 sin(-2 pi rho h)).
State make_initial_state(const RunConfig& cfg, const Discretization& disc);

/// Time-steps a prepared state n_steps times, recording the energy (and the
/// Lyapunov value when mu is supplied) every sample_every steps; the initial
/// state and the final step are always recorded. BlowUp propagates with the
/// failing step index attached.
std::vector<EnergySample> simulate(const SystemMatrix& sm, State s, int n_steps,
                                   Equation eq, int sample_every,
                                   const std::optional<std::pair<double, double>>& mu);

/// Full orchestration of one config: discretize, assemble, step, fit the
/// decay on [T/2, T], certify. Identical configs produce bit-identical
/// results.
RunResult run(const RunConfig& cfg);

/// One run per value substituted along the axis. A failing value records
/// its error in the row and the sweep continues. When series_out is given
/// it receives each successful run's samples (empty for failed values).
std::vector<SweepRow> sweep(const RunConfig& base, SweepAxis axis,
                            const std::vector<double>& values,
                            std::vector<std::vector<EnergySample>>* series_out = nullptr);

} // namespace kdv
