#include "cli/app.hpp"

#include "cli/commands.hpp"
#include "cli/run_spec.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace optforce::cli {

namespace {

struct Flags {
    std::string command;
    std::string config;
    std::optional<double> omega, delta, omega_L, gamma0, gamma_plus, gamma_minus;
    std::optional<double> tol, t_final, epsilon, v0, z0, chirp;
    std::optional<std::size_t> samples;
    std::optional<std::string> model, table, out, format;
    std::vector<std::string> axes;
    unsigned threads = 0;
};

void apply(const Flags& f, RunSpec& spec) {
    if (!f.command.empty()) spec.command = parse_command(f.command);
    if (f.omega) spec.drive.omega = *f.omega;
    if (f.delta) spec.drive.delta = *f.delta;
    if (f.omega_L) spec.drive.omega_L = *f.omega_L;
    if (f.model) spec.reservoir.model = parse_model(*f.model);
    if (f.gamma0) spec.reservoir.gamma0 = *f.gamma0;
    if (f.gamma_plus) spec.reservoir.gamma_plus = *f.gamma_plus;
    if (f.gamma_minus) spec.reservoir.gamma_minus = *f.gamma_minus;
    // explicit sideband rates without a model imply model = rates
    if (!f.model && (f.gamma_plus || f.gamma_minus) && spec.reservoir.model == Model::flat) {
        spec.reservoir.model = Model::rates;
    }
    if (f.table) spec.reservoir.table = *f.table;
    if (f.tol) spec.tol = *f.tol;
    if (f.t_final) spec.t_final = *f.t_final;
    if (f.samples) spec.samples = *f.samples;
    if (f.epsilon) spec.epsilon = *f.epsilon;
    if (f.v0) spec.v0 = *f.v0;
    if (f.z0) spec.z0 = *f.z0;
    if (f.chirp) spec.chirp = *f.chirp;
    if (f.out) spec.output.path = *f.out;
    if (f.format) spec.output.format = parse_format(*f.format);
    if (!f.axes.empty()) {
        spec.axes.clear();
        for (const auto& a : f.axes) spec.axes.push_back(parse_axis(a));
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optical force on a driven two-level atom in free space or modified reservoirs",
                 "optforce"};
    Flags f;
    app.add_option("command", f.command,
                   "force | steady | evolve | sweep | trajectory | fig2 (or [run] command)")
        ->check(CLI::IsMember({"force", "steady", "evolve", "sweep", "trajectory", "fig2"}));
    app.add_option("--config", f.config, "INI configuration file");
    app.add_option("--omega", f.omega, "Rabi frequency (units of gamma0)");
    app.add_option("--delta", f.delta, "detuning omega_0 - omega_L (units of gamma0)");
    app.add_option("--omega-l", f.omega_L, "laser carrier frequency (units of gamma0)");
    app.add_option("--model", f.model, "reservoir model")
        ->check(CLI::IsMember({"flat", "cubic", "custom", "rates"}));
    app.add_option("--table", f.table, "mode density table for --model custom");
    app.add_option("--gamma0", f.gamma0, "carrier decay rate");
    app.add_option("--gamma-plus", f.gamma_plus, "upper sideband decay rate");
    app.add_option("--gamma-minus", f.gamma_minus, "lower sideband decay rate");
    app.add_option("--tol", f.tol, "integrator tolerance");
    app.add_option("--t-final", f.t_final, "final time (units of 1/gamma0)");
    app.add_option("--samples", f.samples, "number of output samples");
    app.add_option("--epsilon", f.epsilon, "recoil parameter hbar k^2 / (m gamma0)");
    app.add_option("--v0", f.v0, "initial velocity (units of gamma0/k_L)");
    app.add_option("--z0", f.z0, "initial position (units of 1/k_L)");
    app.add_option("--chirp", f.chirp, "detuning sweep rate d(delta)/dt");
    app.add_option("--axis", f.axes, "sweep axis name:min:max:count[:linear|log] (repeatable)");
    app.add_option("--out", f.out, "output path (default: standard output)");
    app.add_option("--format", f.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", f.threads, "worker threads for sweeps (0: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "optforce: " << e.what() << '\n';
        return exit_validation;
    }

    if (f.command.empty() && f.config.empty()) {
        err << "optforce: a command is required (positional or [run] command in --config)\n";
        return exit_validation;
    }

    RunSpec spec;
    try {
        if (!f.config.empty()) {
            std::ifstream in(f.config);
            if (!in) {
                err << "optforce: cannot read config '" << f.config << "'\n";
                return exit_validation;
            }
            std::ostringstream text;
            text << in.rdbuf();
            spec = parse_config_document(text.str());
        }
        apply(f, spec);
    } catch (const ConfigError& e) {
        err << "optforce: " << (f.config.empty() ? "" : f.config + ": ") << e.what() << '\n';
        return exit_validation;
    }
    return run_command(spec, out, err, RunOptions{f.threads});
}

}  // namespace optforce::cli
