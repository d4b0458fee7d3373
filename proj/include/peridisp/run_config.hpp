#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace peridisp {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every knob the CLI exposes; file keys use snake_case, flags kebab-case.
struct RunConfig {
    int dim = 2;
    double kappa = 1.0;
    double rho = 1.0;
    double delta = 1.0;
    double alpha = 0.5;
    double sigma = 1.0;
    std::vector<double> times = {0.0, 1.0, 2.0};
    std::string ic_kind = "gaussian-radial";
    int ell_max = 4;
    int grid_n = 200;
    double grid_rmax = 8.0;
    int grid_ntheta = 19;
    int grid_nphi = 1;
    std::vector<double> alphas = {0.1, 0.5, 0.9};  // sweep for the tables command
    std::string output_path = "out.csv";
};

/// Comma-separated list of reals; the empty string parses to an empty list.
std::vector<double> parse_double_list(const std::string& text);

/// Applies one `key = value` assignment; unknown keys or malformed values
/// throw ConfigError.
void apply_key_value(RunConfig& config, const std::string& key, const std::string& value);

/// Reads a line-oriented `key = value` file ('#' starts a comment).
void load_config_file(RunConfig& config, const std::string& path);

/// Full domain validation; throws ConfigError before any computation runs.
void validate(const RunConfig& config);

} // namespace peridisp
