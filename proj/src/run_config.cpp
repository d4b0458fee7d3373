#include "peridisp/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace peridisp {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + value);
    }
    if (pos != value.size())
        throw ConfigError("config: trailing characters in value for '" + key + "': " + value);
    return v;
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    if (v != std::floor(v))
        throw ConfigError("config: '" + key + "' must be an integer");
    return static_cast<int>(v);
}

} // namespace

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    const std::string trimmed = trim(text);
    if (trimmed.empty())
        return out;
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_double("list", trim(item)));
    return out;
}

void apply_key_value(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "dim")
        config.dim = parse_int(key, value);
    else if (key == "kappa")
        config.kappa = parse_double(key, value);
    else if (key == "rho")
        config.rho = parse_double(key, value);
    else if (key == "delta")
        config.delta = parse_double(key, value);
    else if (key == "alpha")
        config.alpha = parse_double(key, value);
    else if (key == "sigma")
        config.sigma = parse_double(key, value);
    else if (key == "times")
        config.times = parse_double_list(value);
    else if (key == "ic")
        config.ic_kind = value;
    else if (key == "lmax")
        config.ell_max = parse_int(key, value);
    else if (key == "grid_n")
        config.grid_n = parse_int(key, value);
    else if (key == "grid_rmax")
        config.grid_rmax = parse_double(key, value);
    else if (key == "grid_ntheta")
        config.grid_ntheta = parse_int(key, value);
    else if (key == "grid_nphi")
        config.grid_nphi = parse_int(key, value);
    else if (key == "alphas")
        config.alphas = parse_double_list(value);
    else if (key == "out")
        config.output_path = value;
    else
        throw ConfigError("config: unknown key '" + key + "'");
}

void load_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot read file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected 'key = value' at " + path + ":" +
                              std::to_string(lineno));
        apply_key_value(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

void validate(const RunConfig& c) {
    if (c.dim < 1 || c.dim > 3)
        throw ConfigError("config: dim must be 1, 2, or 3");
    if (!(c.kappa > 0.0) || !(c.rho > 0.0) || !(c.delta > 0.0))
        throw ConfigError("config: kappa, rho, delta must be > 0");
    if (!(c.alpha > 0.0 && c.alpha < 1.0))
        throw ConfigError("config: alpha must lie in the open interval (0, 1)");
    if (!(c.sigma > 0.0))
        throw ConfigError("config: sigma must be > 0");
    for (std::size_t i = 0; i < c.times.size(); ++i) {
        if (!(c.times[i] >= 0.0))
            throw ConfigError("config: times must be >= 0");
        if (i > 0 && c.times[i] < c.times[i - 1])
            throw ConfigError("config: times must be nondecreasing");
    }
    if (c.ic_kind != "gaussian-radial" && c.ic_kind != "dipole")
        throw ConfigError("config: ic must be 'gaussian-radial' or 'dipole'");
    if (c.ic_kind == "dipole" && c.dim != 3)
        throw ConfigError("config: dipole initial data requires dim = 3");
    if (c.ell_max < 0 || c.ell_max > 8)
        throw ConfigError("config: lmax must lie in [0, 8]");
    if (c.grid_n < 0)
        throw ConfigError("config: grid_n must be >= 0");
    if (!(c.grid_rmax > 0.0))
        throw ConfigError("config: grid_rmax must be > 0");
    if (c.grid_ntheta < 1 || c.grid_nphi < 1)
        throw ConfigError("config: grid_ntheta and grid_nphi must be >= 1");
    if (c.alphas.empty())
        throw ConfigError("config: alphas must be nonempty");
    for (double a : c.alphas)
        if (!(a > 0.0 && a < 1.0))
            throw ConfigError("config: every alphas entry must lie in (0, 1)");
    if (c.output_path.empty())
        throw ConfigError("config: out must be nonempty");
}

} // namespace peridisp
