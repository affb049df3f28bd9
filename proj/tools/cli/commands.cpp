#include "cli/commands.hpp"

#include "optforce/dynamics.hpp"
#include "optforce/error.hpp"
#include "optforce/force.hpp"
#include "optforce/trajectory.hpp"
#include "optforce/version.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace optforce::cli {

namespace {

const std::vector<std::string> diagnostic_columns{"gamma_p",     "gamma_bar",  "gamma_1",
                                                  "gamma_2",     "gamma_tilde", "omega_bar",
                                                  "sin_2theta",  "numerator",  "denominator"};

// Reservoir built once per run so tables are read a single time.
class Reservoir {
public:
    explicit Reservoir(const ReservoirSpec& spec) : spec_(spec) {
        switch (spec.model) {
            case Model::flat: model_ = ReservoirModel::flat(); break;
            case Model::cubic: model_ = ReservoirModel::free_space_cubic(); break;
            case Model::custom: {
                std::ifstream in(spec.table);
                if (!in) {
                    throw DomainError("cannot open mode density table '" + spec.table + "'");
                }
                model_ = ReservoirModel::custom(tabulated_mode_density(read_mode_density_table(in)));
                break;
            }
            case Model::rates: break;
        }
    }

    ReservoirRates rates(const DriveParams& drive, std::optional<double> gamma_plus = {},
                         std::optional<double> gamma_minus = {}) const {
        if (!model_) {
            return {spec_.gamma0, gamma_plus.value_or(*spec_.gamma_plus),
                    gamma_minus.value_or(*spec_.gamma_minus)};
        }
        // Only the sideband splitting matters here, which stays defined at omega = 0.
        DressedFrame frame;
        frame.omega_bar = drive.omega > 0.0 ? dressed_frame(drive).omega_bar
                                            : 0.5 * std::abs(drive.delta);
        return reservoir_rates(*model_, frame, drive, spec_.gamma0);
    }

private:
    ReservoirSpec spec_;
    std::optional<ReservoirModel> model_;
};

std::vector<double> with_diagnostics(std::vector<double> row, const ForceResult& fr) {
    const auto& d = fr.diagnostics;
    row.push_back(fr.f);
    row.insert(row.end(), {d.gamma_p, d.gamma_bar, d.gamma_1, d.gamma_2, d.gamma_tilde,
                           d.omega_bar, d.sin_2theta, d.numerator, d.denominator});
    return row;
}

// Evaluates fn over [0, n) on a worker pool; results land in index order and
// the lowest-index failure is rethrown.
std::vector<std::vector<double>> parallel_rows(std::size_t n, unsigned threads,
                                               const std::function<std::vector<double>(std::size_t)>& fn) {
    std::vector<std::vector<double>> rows(n);
    std::vector<std::exception_ptr> errors(n);
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                rows[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

Table make_table(const RunSpec& spec) {
    Table t;
    t.metadata.push_back(std::string("optforce ") + optforce::version);
    std::istringstream cfg(to_config(spec));
    for (std::string line; std::getline(cfg, line);) {
        if (!line.empty()) t.metadata.push_back(line);
    }
    return t;
}

Table run_force(const RunSpec& spec, const Reservoir& res) {
    Table t = make_table(spec);
    const ReservoirRates rates = res.rates(spec.drive);
    t.columns = {"force"};
    t.columns.insert(t.columns.end(), diagnostic_columns.begin(), diagnostic_columns.end());
    t.columns.insert(t.columns.end(), {"gamma0", "gamma_plus", "gamma_minus"});
    auto row = with_diagnostics({}, force_closed_form(spec.drive, rates));
    row.insert(row.end(), {rates.gamma0(), rates.gamma_plus(), rates.gamma_minus()});
    t.rows.push_back(std::move(row));
    return t;
}

Table run_steady(const RunSpec& spec, const Reservoir& res) {
    Table t = make_table(spec);
    const DressedFrame frame = dressed_frame(spec.drive);
    const auto gen = generator(res.rates(spec.drive), frame);
    const BlochState s = steady_state(gen);
    t.columns = {"w", "u", "v", "force", "bare_inversion", "excited_population"};
    t.rows.push_back({s.w.real(), s.u(), s.v(), force_from_state(s, spec.drive).f,
                      bare_inversion(s, frame), excited_population(s, frame)});
    return t;
}

Table run_evolve(const RunSpec& spec, const Reservoir& res) {
    Table t = make_table(spec);
    const auto gen = generator(res.rates(spec.drive), dressed_frame(spec.drive));
    const auto times = uniform_times(0.0, spec.t_final, spec.samples);
    const auto states = evolve(gen, BlochState::dressed_ground(), times, spec.tol);
    t.columns = {"t", "w", "u", "v", "force"};
    for (const auto& s : states) {
        t.rows.push_back({s.t, s.w.real(), s.u(), s.v(), force_from_state(s, spec.drive).f});
    }
    return t;
}

Table run_trajectory(const RunSpec& spec, const Reservoir& res) {
    Table t = make_table(spec);
    const ReservoirRates rates = res.rates(spec.drive);
    const auto times = uniform_times(0.0, spec.t_final, spec.samples);
    const AtomKinematics start{.v = spec.v0, .z = spec.z0, .epsilon = spec.epsilon, .t = 0.0};
    const auto traj = simulate_trajectory(start, spec.drive, rates, times,
                                          {.tol = spec.tol, .chirp = spec.chirp});
    t.columns = {"t", "z", "v", "force"};
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        const auto& k = traj.samples[i];
        t.rows.push_back({k.t, k.z, k.v, traj.force[i]});
    }
    return t;
}

Table run_sweep(const RunSpec& spec, const Reservoir& res, const RunOptions& options) {
    Table t = make_table(spec);
    std::vector<std::vector<double>> grids;
    for (const auto& a : spec.axes) {
        grids.push_back(axis_values(a));
        t.columns.emplace_back(to_string(a.name));
    }
    const std::size_t inner = grids.size() == 2 ? grids[1].size() : 1;
    const std::size_t n = grids[0].size() * inner;

    if (spec.axes[0].name == AxisName::x) {
        t.columns.insert(t.columns.end(), {"force", "force_quadratic"});
        t.rows = parallel_rows(n, options.threads, [&](std::size_t i) {
            const double x = grids[0][i];
            return std::vector<double>{x, force_intense_free_space(x, IntenseMode::exact).f,
                                       force_intense_free_space(x, IntenseMode::quadratic).f};
        });
        return t;
    }

    t.columns.emplace_back("force");
    t.columns.insert(t.columns.end(), diagnostic_columns.begin(), diagnostic_columns.end());
    t.rows = parallel_rows(n, options.threads, [&](std::size_t i) {
        DriveParams drive = spec.drive;
        std::optional<double> gp;
        std::optional<double> gm;
        std::vector<double> row;
        for (std::size_t k = 0; k < grids.size(); ++k) {
            const double value = grids[k][k == 0 ? i / inner : i % inner];
            row.push_back(value);
            switch (spec.axes[k].name) {
                case AxisName::omega: drive.omega = value; break;
                case AxisName::delta: drive.delta = value; break;
                case AxisName::gamma_plus: gp = value; break;
                case AxisName::gamma_minus: gm = value; break;
                case AxisName::x: break;
            }
        }
        return with_diagnostics(std::move(row), force_closed_form(drive, res.rates(drive, gp, gm)));
    });
    return t;
}

Table run_fig2(const RunSpec& spec, const RunOptions& options) {
    Table t = make_table(spec);
    const AxisSpec grid = spec.axes.empty()
                              ? AxisSpec{AxisName::gamma_plus, 0.1, 1000.0, 121, Spacing::log}
                              : spec.axes[0];
    const auto ratios = axis_values(grid);
    constexpr std::array<double, 3> minus_ratios{1.0, 3.0, 10.0};
    t.columns = {"gamma_plus_over_gamma0", "force_gm1", "force_gm3", "force_gm10"};
    t.rows = parallel_rows(ratios.size(), options.threads, [&](std::size_t i) {
        std::vector<double> row{ratios[i]};
        for (double gm : minus_ratios) {
            row.push_back(force_saturated_modified(ReservoirRates(1.0, ratios[i], gm)).f);
        }
        return row;
    });
    return t;
}

}  // namespace

std::vector<double> axis_values(const AxisSpec& axis) {
    std::vector<double> v(axis.count);
    const double last = static_cast<double>(axis.count - 1);
    for (std::size_t i = 0; i < axis.count; ++i) {
        const double s = static_cast<double>(i) / last;
        v[i] = axis.spacing == Spacing::log
                   ? std::exp(std::log(axis.min) + s * (std::log(axis.max) - std::log(axis.min)))
                   : axis.min + s * (axis.max - axis.min);
    }
    v.front() = axis.min;
    v.back() = axis.max;
    return v;
}

ReservoirRates rates_for(const RunSpec& spec, const DriveParams& drive) {
    return Reservoir(spec.reservoir).rates(drive);
}

Table compute(const RunSpec& spec, const RunOptions& options) {
    if (spec.command == Command::fig2) {
        return run_fig2(spec, options);
    }
    const Reservoir res(spec.reservoir);
    switch (spec.command) {
        case Command::force: return run_force(spec, res);
        case Command::steady: return run_steady(spec, res);
        case Command::evolve: return run_evolve(spec, res);
        case Command::sweep: return run_sweep(spec, res, options);
        case Command::trajectory: return run_trajectory(spec, res);
        case Command::fig2: break;
    }
    return run_fig2(spec, options);
}

int run_command(const RunSpec& spec, std::ostream& out, std::ostream& err,
                const RunOptions& options) {
    auto echo = [&] { err << "parameters:\n" << to_config(spec); };
    Table table;
    try {
        validate(spec);
        table = compute(spec, options);
    } catch (const ConfigError& e) {
        err << "optforce: validation error: " << e.what() << '\n';
        return exit_validation;
    } catch (const DomainError& e) {
        err << "optforce: invalid parameters: " << e.what() << '\n';
        echo();
        return exit_validation;
    } catch (const NumericalError& e) {
        err << "optforce: numerical failure: " << e.what() << '\n';
        echo();
        return exit_numerical;
    }

    std::ofstream file;
    std::ostream* dest = &out;
    if (!spec.output.path.empty()) {
        file.open(spec.output.path, std::ios::binary);
        if (!file) {
            err << "optforce: cannot write '" << spec.output.path << "'\n";
            return exit_validation;
        }
        dest = &file;
    }
    if (spec.output.format == Format::json) {
        write_json(*dest, table);
    } else {
        write_csv(*dest, table);
    }
    dest->flush();
    return exit_ok;
}

}  // namespace optforce::cli
