#include "peridisp/csv_format.hpp"
#include "peridisp/dispersion.hpp"
#include "peridisp/initial_conditions.hpp"
#include "peridisp/oracle.hpp"
#include "peridisp/quadrature.hpp"
#include "peridisp/run_config.hpp"
#include "peridisp/spectral_solver.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace peridisp;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open output file: " + path);
    out << content;
    if (!out)
        throw IoError("write failed: " + path);
}

// Raw option storage for one subcommand; only flags the user actually passed
// override the config file.
struct CliOptions {
    std::string config_path;
    int dim = 0;
    double alpha = 0, delta = 0, kappa = 0, rho = 0, sigma = 0, grid_rmax = 0;
    std::string times, ic, alphas, out;
    int lmax = 0, grid_n = 0, grid_ntheta = 0, grid_nphi = 0;
    double max_rel_err = 1e-7;
};

void add_common_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--config", opt.config_path, "key = value configuration file");
    cmd->add_option("--dim", opt.dim, "spatial dimension (1, 2, or 3)");
    cmd->add_option("--alpha", opt.alpha, "kernel singularity exponent in (0,1)");
    cmd->add_option("--delta", opt.delta, "interaction horizon");
    cmd->add_option("--kappa", opt.kappa, "kernel strength");
    cmd->add_option("--rho", opt.rho, "mass density");
    cmd->add_option("--sigma", opt.sigma, "Gaussian width of the initial datum");
    cmd->add_option("--times", opt.times, "comma-separated snapshot times");
    cmd->add_option("--ic", opt.ic, "initial condition: gaussian-radial or dipole");
    cmd->add_option("--lmax", opt.lmax, "multipole truncation degree");
    cmd->add_option("--grid-n", opt.grid_n, "number of radial grid points");
    cmd->add_option("--grid-rmax", opt.grid_rmax, "largest grid radius");
    cmd->add_option("--grid-ntheta", opt.grid_ntheta, "polar-angle sample count");
    cmd->add_option("--grid-nphi", opt.grid_nphi, "azimuth sample count");
    cmd->add_option("--alphas", opt.alphas, "comma-separated alpha sweep for tables");
    cmd->add_option("--out", opt.out, "output CSV path");
}

RunConfig assemble_config(const CLI::App* cmd, const CliOptions& opt) {
    RunConfig config;
    if (cmd->count("--config"))
        load_config_file(config, opt.config_path);
    if (cmd->count("--dim"))
        config.dim = opt.dim;
    if (cmd->count("--alpha"))
        config.alpha = opt.alpha;
    if (cmd->count("--delta"))
        config.delta = opt.delta;
    if (cmd->count("--kappa"))
        config.kappa = opt.kappa;
    if (cmd->count("--rho"))
        config.rho = opt.rho;
    if (cmd->count("--sigma"))
        config.sigma = opt.sigma;
    if (cmd->count("--times"))
        config.times = parse_double_list(opt.times);
    if (cmd->count("--ic"))
        config.ic_kind = opt.ic;
    if (cmd->count("--lmax"))
        config.ell_max = opt.lmax;
    if (cmd->count("--grid-n"))
        config.grid_n = opt.grid_n;
    if (cmd->count("--grid-rmax"))
        config.grid_rmax = opt.grid_rmax;
    if (cmd->count("--grid-ntheta"))
        config.grid_ntheta = opt.grid_ntheta;
    if (cmd->count("--grid-nphi"))
        config.grid_nphi = opt.grid_nphi;
    if (cmd->count("--alphas"))
        config.alphas = parse_double_list(opt.alphas);
    if (cmd->count("--out"))
        config.output_path = opt.out;
    validate(config);
    return config;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    if (n <= 0)
        return out;
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(lo + (hi - lo) * i / (n - 1));
    return out;
}

int cmd_dispersion(const RunConfig& config) {
    const Dimension dim{config.dim};
    const MaterialParams params{config.kappa, config.rho, config.delta, config.alpha};
    const int n = std::max(2, config.grid_n);
    std::vector<double> grid;
    grid.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double lg = -3.0 + 7.0 * i / (n - 1);  // xi*delta spanning [1e-3, 1e4]
        grid.push_back(std::pow(10.0, lg) / config.delta);
    }
    const DispersionTable table = dispersion_table(dim, params, grid);
    std::ostringstream csv;
    write_csv(table, csv);
    write_file(config.output_path, csv.str());
    return kExitOk;
}

int cmd_evolve(const RunConfig& config) {
    EvolutionRequest request;
    request.dim = Dimension{config.dim};
    request.params = MaterialParams{config.kappa, config.rho, config.delta, config.alpha};
    request.times = config.times;
    request.radii = linspace(0.0, config.grid_rmax, config.grid_n);
    const bool anisotropic = config.ic_kind == "dipole";
    if (anisotropic) {
        request.multipoles = dipole_initial_condition(config.sigma);
        request.thetas = config.grid_ntheta == 1 ? std::vector<double>{0.0}
                                                 : linspace(0.0, M_PI, config.grid_ntheta);
        for (int j = 0; j < config.grid_nphi; ++j)
            request.phis.push_back(2.0 * M_PI * j / config.grid_nphi);
        request.v0_hat = zero_spectrum(1.0 / config.sigma);
        request.v1_hat = zero_spectrum(1.0 / config.sigma);
    } else {
        request.v0_hat = gaussian_spectrum(config.sigma, request.dim);
        request.v1_hat = zero_spectrum(1.0 / config.sigma);
    }
    const std::vector<FieldSnapshot> snapshots = field_snapshot(request);
    std::ostringstream csv;
    write_csv(snapshots, csv, anisotropic);
    write_file(config.output_path, csv.str());
    return kExitOk;
}

int cmd_tables(const RunConfig& config) {
    std::ostringstream csv;
    csv << "dim,alpha,low_coeff,high_coeff,vg_large\n";
    for (int n : {1, 2, 3}) {
        const Dimension dim{n};
        for (double a : config.alphas) {
            MaterialParams p{config.kappa, config.rho, config.delta, a};
            csv << n << ',' << format_float(a) << ',' << format_float(low_freq_coefficient(dim, p))
                << ',' << format_float(high_freq_coefficient(dim, p)) << ','
                << format_float(large_scale_group_velocity(dim, p)) << '\n';
        }
    }
    write_file(config.output_path, csv.str());
    return kExitOk;
}

int cmd_verify(const RunConfig& config, double max_rel_err) {
    const auto rows = oracle::run_verification_matrix(max_rel_err);
    std::ostringstream csv;
    oracle::write_csv(rows, csv);
    write_file(config.output_path, csv.str());
    bool all_pass = true;
    for (const auto& row : rows) {
        if (!row.pass) {
            all_pass = false;
            std::cerr << "FAILED " << row.check << " dim=" << row.dim << " alpha=" << row.alpha
                      << " xi_delta=" << row.xi_delta << " rel_err=" << row.rel_err << "\n";
        }
    }
    return all_pass ? kExitOk : kExitNumerical;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear bond-based peridynamic dispersion and spectral evolution toolkit"};
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App* dispersion = app.add_subcommand("dispersion", "tabulate omega(xi) over a log grid");
    CLI::App* evolve = app.add_subcommand("evolve", "sample field snapshots at requested times");
    CLI::App* tables = app.add_subcommand("tables", "asymptotic coefficients and group velocities");
    CLI::App* verify = app.add_subcommand("verify", "direct-space operator verification matrix");
    for (CLI::App* cmd : {dispersion, evolve, tables, verify})
        add_common_options(cmd, opt);
    verify->add_option("--max-rel-err", opt.max_rel_err,
                       "pass threshold for the plane-wave residual");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        const CLI::App* active = app.get_subcommands().front();
        const RunConfig config = assemble_config(active, opt);
        if (active == dispersion)
            return cmd_dispersion(config);
        if (active == evolve)
            return cmd_evolve(config);
        if (active == tables)
            return cmd_tables(config);
        return cmd_verify(config, opt.max_rel_err);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}
