#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdirac/step_solution.hpp"

namespace qdirac::cli {

enum class Format { Csv, Json };

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kInvalidArguments = 2,
    kNoSolution = 3,
};

struct RunConfig {
    std::string command;
    double mass = 1.0;
    double v0 = 0.0;
    double w_abs = 0.5;
    double w_phase = 0.0;
    double length = 1.0;
    int levels = 3;
    int level = 1;  // density: which level to sample
    std::optional<Branch> branch;  // nullopt: both
    Spin spin = Spin::Up;
    std::optional<double> e_min;  // defaults to the mass
    std::optional<double> e_max;  // defaults to mass + 4
    double e_step = 0.01;
    int grid = 201;
    Format format = Format::Csv;
    std::string output;  // empty: stdout
};

/// Empty when the config is valid, otherwise the reason it is not.
std::optional<std::string> validate(const RunConfig& cfg);

/// Shortest-safe text form used in CSV output: 17 significant digits, no locale.
std::string format_number(double x);

int cmd_zones(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bag_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_density(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_nr_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.command and handles --output.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. Argument errors return kInvalidArguments.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qdirac::cli
