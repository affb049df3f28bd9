#pragma once

#include "optforce/drive.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace optforce::cli {

enum class Command { force, steady, evolve, sweep, trajectory, fig2 };
enum class Model { flat, cubic, custom, rates };
enum class AxisName { omega, delta, gamma_plus, gamma_minus, x };
enum class Spacing { linear, log };
enum class Format { csv, json };

std::string_view to_string(Command c);
std::string_view to_string(Model m);
std::string_view to_string(AxisName a);
std::string_view to_string(Spacing s);
std::string_view to_string(Format f);

struct AxisSpec {
    AxisName name = AxisName::omega;
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;
    Spacing spacing = Spacing::linear;

    bool operator==(const AxisSpec&) const = default;
};

struct ReservoirSpec {
    Model model = Model::flat;
    double gamma0 = 1.0;
    std::optional<double> gamma_plus;
    std::optional<double> gamma_minus;
    std::string table;  // mode-density file for model = custom

    bool operator==(const ReservoirSpec&) const = default;
};

struct OutputSpec {
    std::string path;  // empty: standard output
    Format format = Format::csv;

    bool operator==(const OutputSpec&) const = default;
};

/// Everything a run depends on. Thread count is deliberately not part of it.
struct RunSpec {
    Command command = Command::force;
    DriveParams drive{.omega = 1.0, .delta = 0.0, .omega_L = {}, .k_L = 1.0};
    ReservoirSpec reservoir;
    std::vector<AxisSpec> axes;
    OutputSpec output;
    double tol = 1e-10;
    double t_final = 20.0;
    std::size_t samples = 201;
    double epsilon = 0.01;
    double v0 = 0.0;
    double z0 = 0.0;
    double chirp = 0.0;

    bool operator==(const RunSpec&) const = default;
};

/// Configuration problem. `key` and `line` (1-based, 0 when not from a file)
/// locate the offending entry.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, std::string key, int line)
        : std::runtime_error(what), key_(std::move(key)), line_(line) {}
    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    std::string key_;
    int line_;
};

class ParseError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class ValidationError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class UnknownKey : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// INI-style document: [run] [drive] [reservoir] [sweep] [output] sections,
// `key = value` lines, '#' comments. Each [sweep] section adds one axis.
// Checks syntax and per-key values only.
RunSpec parse_config_document(std::string_view text);

// Cross-field checks; throws ValidationError naming the key.
void validate(const RunSpec& spec);

/// parse_config_document followed by validate.
RunSpec parse_config(std::string_view text);

/// Canonical document; parse_config_document(to_config(s)) == s.
std::string to_config(const RunSpec& spec);

/// "name:min:max:count[:spacing]"
AxisSpec parse_axis(std::string_view text);

Command parse_command(std::string_view text);
Model parse_model(std::string_view text);
Format parse_format(std::string_view text);

/// Shortest-safe decimal form used everywhere numbers are written: 17
/// significant digits.
std::string format_number(double x);

}  // namespace optforce::cli
