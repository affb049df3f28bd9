#pragma once

#include "cli/run_spec.hpp"
#include "cli/table.hpp"

#include "optforce/drive.hpp"
#include "optforce/reservoir.hpp"

#include <iosfwd>

namespace optforce::cli {

struct RunOptions {
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Exit statuses of run_command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_numerical = 2;

// Grid values of one axis, endpoints exact.
std::vector<double> axis_values(const AxisSpec& axis);

// Rates seen by `drive` under the spec's reservoir (table files are read from
// disk for model = custom).
ReservoirRates rates_for(const RunSpec& spec, const DriveParams& drive);

/// Computes the table for a validated spec. Throws the library's DomainError /
/// NumericalError on failure.
Table compute(const RunSpec& spec, const RunOptions& options = {});

// Validates, computes and writes the result to spec.output.path (or `out`
// when empty). Errors are reported on `err` with the parameter set echoed.
int run_command(const RunSpec& spec, std::ostream& out, std::ostream& err,
                const RunOptions& options = {});

}  // namespace optforce::cli
