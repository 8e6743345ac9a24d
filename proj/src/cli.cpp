#include "kdv/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kdv/runner.hpp"
#include "kdv/svg.hpp"

namespace kdv {

namespace {

std::filesystem::path prepare_output_dir(const std::string& dir) {
    std::filesystem::path p = dir.empty() ? "." : dir;
    std::error_code ec;
    std::filesystem::create_directories(p, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + p.string() +
                      "': " + ec.message());
    }
    return p;
}

void print_notices(const std::vector<std::string>& notices) {
    for (const std::string& n : notices) std::cerr << "warning: " << n << "\n";
}

std::vector<std::pair<double, double>> ln_energy_points(
    const std::vector<EnergySample>& samples) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(samples.size());
    for (const EnergySample& s : samples) pts.emplace_back(s.t, std::log(s.E));
    return pts;
}

int command_run(const std::string& config_path, const std::string& output_dir,
                bool plot) {
    RunConfig cfg = load_config(config_path);
    if (!output_dir.empty()) cfg.output_dir = output_dir;

    const RunResult res = run(cfg); // notices include the config warnings
    print_notices(res.notices);

    const auto out = prepare_output_dir(cfg.output_dir);
    emit_csv(res.samples, (out / "series.csv").string());
    emit_csv(res.report, (out / "report.csv").string());
    if (plot) {
        emit_svg_plot({{"ln E", ln_energy_points(res.samples)}},
                      (out / "energy.svg").string());
    }

    std::cout << "samples: " << res.samples.size() << "\n"
              << "E(0) = " << format_double(res.samples.front().E) << "\n"
              << "E(T) = " << format_double(res.samples.back().E) << "\n"
              << "fitted nu = " << format_double(res.fit.nu)
              << "  kappa = " << format_double(res.fit.kappa)
              << "  r2 = " << format_double(res.fit.r2) << "  (window ["
              << res.fit.t_lo << ", " << res.fit.t_hi << "])\n"
              << "wrote " << (out / "series.csv").string() << ", "
              << (out / "report.csv").string()
              << (plot ? ", " + (out / "energy.svg").string() : "") << "\n";
    return 0;
}

int command_sweep(const std::string& config_path, const std::string& axis_name,
                  const std::vector<double>& values, const std::string& output_dir,
                  bool plot) {
    if (values.empty()) {
        throw ValidationError("sweep needs at least one value");
    }
    RunConfig cfg = load_config(config_path);
    if (!output_dir.empty()) cfg.output_dir = output_dir;
    const SweepAxis axis = parse_sweep_axis(axis_name);

    std::vector<std::vector<EnergySample>> series;
    const std::vector<SweepRow> rows = sweep(cfg, axis, values, &series);

    const auto out = prepare_output_dir(cfg.output_dir);
    emit_csv(rows, (out / "sweep.csv").string());

    if (plot) {
        std::vector<PlotSeries> plots;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].error.empty()) continue;
            std::ostringstream name;
            name << axis_name << "=" << rows[i].value;
            plots.push_back({name.str(), ln_energy_points(series[i])});
        }
        if (plots.empty()) {
            throw EmptySeries("every sweep value failed, nothing to plot");
        }
        emit_svg_plot(plots, (out / "sweep.svg").string());
    }

    std::cout << "value,nu,kappa,r2,error\n";
    for (const SweepRow& r : rows) {
        std::cout << format_double(r.value) << ',' << format_double(r.nu) << ','
                  << format_double(r.kappa) << ',' << format_double(r.r2) << ','
                  << r.error << "\n";
    }
    std::cout << "wrote " << (out / "sweep.csv").string()
              << (plot ? ", " + (out / "sweep.svg").string() : "") << "\n";
    return 0;
}

int command_certify(double alpha, double beta, double L, double h,
                    const std::string& output_dir) {
    const CertificateReport rep = certify(alpha, beta, L, h, true);
    const std::string body = to_csv(rep);
    if (!output_dir.empty()) {
        const auto out = prepare_output_dir(output_dir);
        emit_csv(rep, (out / "report.csv").string());
        std::cout << "wrote " << (out / "report.csv").string() << "\n";
    } else {
        std::cout << body;
    }
    return 0;
}

int command_critical(double max_length, const std::string& output_dir) {
    const auto lengths = critical_lengths_below(max_length);
    std::ostringstream body;
    body << "L,k,l\n";
    for (const CriticalLength& c : lengths) {
        body << format_double(c.value) << ',' << c.k << ',' << c.l << "\n";
    }
    if (!output_dir.empty()) {
        const auto out = prepare_output_dir(output_dir);
        const auto path = out / "critical_lengths.csv";
        std::ofstream f(path, std::ios::binary);
        if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
        f << body.str();
        std::cout << "wrote " << path.string() << "\n";
    } else {
        std::cout << body.str();
    }
    return 0;
}

} // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"Simulator and stability certificates for the KdV equation "
                 "with delayed boundary feedback",
                 "kdvfb"};
    app.require_subcommand(1);

    std::string config_path, output_dir, axis_name;
    std::vector<double> values;
    bool plot = false;
    double alpha = 0, beta = 0, L = 1, h = 1, max_length = 100;

    CLI::App* cmd_run = app.add_subcommand("run", "Run one simulation from a config file");
    cmd_run->add_option("config", config_path, "config file (key = value lines)")
        ->required();
    cmd_run->add_option("--output-dir", output_dir, "override the config's output_dir");
    cmd_run->add_flag("--plot", plot, "also write an SVG chart of ln E(t)");

    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "Re-run a config across one parameter axis");
    cmd_sweep->add_option("config", config_path, "base config file")->required();
    cmd_sweep->add_option("--axis", axis_name, "h, beta, alpha or L")->required();
    cmd_sweep->add_option("--values", values, "comma-separated substitutions")
        ->required()
        ->delimiter(',');
    cmd_sweep->add_option("--output-dir", output_dir, "override the config's output_dir");
    cmd_sweep->add_flag("--plot", plot, "also write an SVG chart, one curve per value");

    CLI::App* cmd_certify =
        app.add_subcommand("certify", "Evaluate the closed-form stability certificates");
    // The spelled-out delay option --h needs the short help alias out of the way.
    cmd_certify->set_help_flag("--help", "print this help message and exit");
    cmd_certify->add_option("--alpha", alpha, "undelayed feedback coefficient")
        ->required();
    cmd_certify->add_option("--beta", beta, "delayed feedback coefficient")->required();
    cmd_certify->add_option("--L", L, "domain length")->required();
    cmd_certify->add_option("--h", h, "delay")->capture_default_str();
    cmd_certify->add_option("--output-dir", output_dir,
                            "write report.csv there instead of stdout");

    CLI::App* cmd_critical =
        app.add_subcommand("critical-lengths", "List the critical domain lengths");
    cmd_critical->add_option("--max", max_length, "upper bound on the lengths")
        ->capture_default_str();
    cmd_critical->add_option("--output-dir", output_dir,
                             "write critical_lengths.csv there instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(cmd_run)) {
            return command_run(config_path, output_dir, plot);
        }
        if (app.got_subcommand(cmd_sweep)) {
            return command_sweep(config_path, axis_name, values, output_dir, plot);
        }
        if (app.got_subcommand(cmd_certify)) {
            return command_certify(alpha, beta, L, h, output_dir);
        }
        if (app.got_subcommand(cmd_critical)) {
            return command_critical(max_length, output_dir);
        }
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const SimulationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace kdv
