#include "kdv/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "kdv/certificates.hpp"

namespace kdv {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& value, int line, const std::string& key) {
    std::size_t pos = 0;
    double out = 0;
    try {
        out = std::stod(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != value.size() || value.empty()) {
        std::ostringstream msg;
        msg << "line " << line << ": key '" << key << "' expects a number, got '"
            << value << "'";
        throw ParseError(msg.str());
    }
    return out;
}

long parse_integer(const std::string& value, int line, const std::string& key) {
    std::size_t pos = 0;
    long out = 0;
    try {
        out = std::stol(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != value.size() || value.empty()) {
        std::ostringstream msg;
        msg << "line " << line << ": key '" << key
            << "' expects an integer, got '" << value << "'";
        throw ParseError(msg.str());
    }
    return out;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::map<std::string, bool> seen;

    std::istringstream stream(text);
    std::string raw;
    int line = 0;
    while (std::getline(stream, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string entry = trim(raw);
        if (entry.empty()) continue;

        const auto eq = entry.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "line " << line << ": expected 'key = value', got '" << entry
                << "'";
            throw ParseError(msg.str());
        }
        const std::string key = trim(entry.substr(0, eq));
        const std::string value = trim(entry.substr(eq + 1));
        if (key.empty()) {
            std::ostringstream msg;
            msg << "line " << line << ": empty key";
            throw ParseError(msg.str());
        }
        if (seen[key]) {
            std::ostringstream msg;
            msg << "line " << line << ": duplicate key '" << key << "'";
            throw ParseError(msg.str());
        }
        seen[key] = true;

        if (key == "equation") {
            if (value == "linear") {
                cfg.equation = Equation::linear;
            } else if (value == "nonlinear") {
                cfg.equation = Equation::nonlinear;
            } else {
                std::ostringstream msg;
                msg << "line " << line
                    << ": equation must be 'linear' or 'nonlinear', got '" << value
                    << "'";
                throw ParseError(msg.str());
            }
        } else if (key == "L") {
            cfg.L = parse_number(value, line, key);
        } else if (key == "T") {
            cfg.T = parse_number(value, line, key);
        } else if (key == "h") {
            cfg.h = parse_number(value, line, key);
        } else if (key == "alpha") {
            cfg.alpha = parse_number(value, line, key);
        } else if (key == "beta") {
            cfg.beta = parse_number(value, line, key);
        } else if (key == "dx") {
            cfg.dx = parse_number(value, line, key);
        } else if (key == "dt") {
            cfg.dt = parse_number(value, line, key);
        } else if (key == "drho") {
            cfg.drho = parse_number(value, line, key);
        } else if (key == "initial") {
            if (value == "paper_default") {
                cfg.initial = InitialKind::paper_default;
            } else if (value == "zero") {
                cfg.initial = InitialKind::zero;
            } else if (value.rfind("file ", 0) == 0) {
                cfg.initial = InitialKind::file;
                cfg.initial_file = trim(value.substr(5));
                if (cfg.initial_file.empty()) {
                    std::ostringstream msg;
                    msg << "line " << line << ": 'initial = file <path>' needs a path";
                    throw ParseError(msg.str());
                }
            } else {
                std::ostringstream msg;
                msg << "line " << line
                    << ": initial must be 'paper_default', 'zero' or 'file <path>', got '"
                    << value << "'";
                throw ParseError(msg.str());
            }
        } else if (key == "lyapunov") {
            if (value == "auto") {
                cfg.lyapunov.mode = LyapunovChoice::Mode::automatic;
            } else if (value == "none") {
                cfg.lyapunov.mode = LyapunovChoice::Mode::none;
            } else {
                const auto comma = value.find(',');
                if (comma == std::string::npos) {
                    std::ostringstream msg;
                    msg << "line " << line
                        << ": lyapunov must be 'auto', 'none' or '<mu1>,<mu2>', got '"
                        << value << "'";
                    throw ParseError(msg.str());
                }
                cfg.lyapunov.mode = LyapunovChoice::Mode::explicit_params;
                cfg.lyapunov.mu1 = parse_number(trim(value.substr(0, comma)), line, key);
                cfg.lyapunov.mu2 = parse_number(trim(value.substr(comma + 1)), line, key);
            }
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else if (key == "sample_every") {
            cfg.sample_every = static_cast<int>(parse_integer(value, line, key));
        } else {
            std::ostringstream msg;
            msg << "line " << line << ": unknown key '" << key << "'";
            throw ParseError(msg.str());
        }
    }

    // Validation collects every violation instead of stopping at the first.
    std::vector<std::string> violations;
    const struct {
        const char* name;
        double value;
        bool present;
    } required[] = {
        {"L", cfg.L, seen["L"]},       {"T", cfg.T, seen["T"]},
        {"h", cfg.h, seen["h"]},       {"alpha", cfg.alpha, seen["alpha"]},
        {"beta", cfg.beta, seen["beta"]}, {"dx", cfg.dx, seen["dx"]},
        {"dt", cfg.dt, seen["dt"]},    {"drho", cfg.drho, seen["drho"]},
    };
    for (const auto& req : required) {
        if (!req.present) {
            violations.push_back(std::string("missing required key '") + req.name + "'");
        }
    }
    const struct {
        const char* name;
        double value;
    } positive[] = {{"L", cfg.L},   {"T", cfg.T},   {"h", cfg.h},
                    {"dx", cfg.dx}, {"dt", cfg.dt}, {"drho", cfg.drho}};
    for (const auto& p : positive) {
        if (seen[p.name] && (!(p.value > 0) || !std::isfinite(p.value))) {
            std::ostringstream msg;
            msg << p.name << " must be strictly positive, got " << p.value;
            violations.push_back(msg.str());
        }
    }
    if (seen["L"] && seen["dx"] && cfg.L > 0 && cfg.dx > 0 &&
        std::lround(cfg.L / cfg.dx) < 4) {
        std::ostringstream msg;
        msg << "grid too coarse: L/dx rounds to " << std::lround(cfg.L / cfg.dx)
            << ", need at least 4 space steps";
        violations.push_back(msg.str());
    }
    if (cfg.sample_every < 1) {
        std::ostringstream msg;
        msg << "sample_every must be at least 1, got " << cfg.sample_every;
        violations.push_back(msg.str());
    }
    if (cfg.lyapunov.mode == LyapunovChoice::Mode::explicit_params &&
        (!(cfg.lyapunov.mu1 > 0) || !(cfg.lyapunov.mu2 > 0) ||
         !(cfg.lyapunov.mu2 < 1))) {
        std::ostringstream msg;
        msg << "lyapunov weights need mu1 > 0 and mu2 in (0,1), got mu1 = "
            << cfg.lyapunov.mu1 << ", mu2 = " << cfg.lyapunov.mu2;
        violations.push_back(msg.str());
    }

    if (!violations.empty()) {
        std::string msg = "invalid configuration:";
        for (const std::string& v : violations) msg += "\n  - " + v;
        throw ValidationError(msg);
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::vector<std::string> config_warnings(const RunConfig& cfg) {
    std::vector<std::string> warnings;
    if (!is_admissible(cfg.alpha, cfg.beta)) {
        std::ostringstream msg;
        msg << "inadmissible: |alpha| + |beta| >= 1 (" << std::abs(cfg.alpha)
            << " + " << std::abs(cfg.beta)
            << "); the simulation runs but no decay is certified";
        warnings.push_back(msg.str());
    }
    return warnings;
}

} // namespace kdv
