#pragma once

#include <string>
#include <vector>

#include "kdv/errors.hpp"

namespace kdv {

enum class Equation { linear, nonlinear };

enum class InitialKind { paper_default, zero, file };

/// How a run selects its Lyapunov weights.
struct LyapunovChoice {
    enum class Mode {
        automatic, ///< half the certified bounds, omitted when unavailable
        explicit_params,
        none
    };
    Mode mode = Mode::automatic;
    double mu1 = 0;
    double mu2 = 0;
};

/// One simulation, fully specified.
///
/// Text form: one `key = value` per line, `#` starts a comment.
/// Required keys: L, T, h, alpha, beta, dx, dt, drho.
/// Optional keys with defaults:
///   equation = linear | nonlinear            (linear)
///   initial = paper_default | zero | file <path>   (paper_default)
///   lyapunov = auto | none | <mu1>,<mu2>     (auto)
///   output_dir = <path>                      (.)
///   sample_every = <n>                       (1)
struct RunConfig {
    Equation equation = Equation::linear;
    double L = 0;
    double T = 0;
    double h = 0;
    double alpha = 0;
    double beta = 0;
    double dx = 0;
    double dt = 0;
    double drho = 0;
    InitialKind initial = InitialKind::paper_default;
    std::string initial_file;
    LyapunovChoice lyapunov;
    std::string output_dir = ".";
    int sample_every = 1;
};

/// Parses the text form. Throws ParseError (with the line number and key)
/// on malformed input, and a single ValidationError listing every violated
/// precondition once parsing succeeded.
RunConfig parse_config(const std::string& text);

/// parse_config on the contents of a file. Throws IoError when unreadable.
RunConfig load_config(const std::string& path);

/// Non-fatal observations about a config, e.g. an inadmissible feedback
/// pair. The simulation still runs; callers decide whether to print.
std::vector<std::string> config_warnings(const RunConfig& cfg);

} // namespace kdv
