#include <sunstruct/runconfig.hpp>

#include <sunstruct/checks.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace sunstruct {

namespace {

const std::map<std::string, RunMode> kModeNames = {
    {"profiles", RunMode::profiles},
    {"energy", RunMode::energy},
    {"luminosity", RunMode::luminosity},
    {"all", RunMode::all},
    {"check", RunMode::check},
};

void append_error(std::string& acc, const std::exception& e) {
    if (!acc.empty()) acc += '\n';
    acc += "config error: ";
    acc += e.what();
}

} // namespace

RunConfig parse_run_config(const std::vector<std::string>& args) {
    RunConfig cfg;

    CLI::App app{"solar interior profile tables"};

    app.add_option("--delta", cfg.params.delta,
                   "density-law radius exponent (0, 10]");
    app.add_option("--gamma", cfg.params.gamma,
                   "density-law polytropic-like integer degree [1, 64]");
    app.add_option("--n-exp,--nexp", cfg.params.n_exp,
                   "energy-rate density exponent");
    app.add_option("--m-exp,--mexp", cfg.params.m_exp,
                   "energy-rate temperature exponent (>= n-exp)");
    app.add_option("--epsilon0", cfg.params.epsilon0,
                   "energy-rate coefficient");
    app.add_option("--X", cfg.composition.X, "hydrogen mass fraction");
    app.add_option("--Y", cfg.composition.Y, "helium mass fraction");
    app.add_option("--Z", cfg.composition.Z, "metal mass fraction");
    app.add_option("--G", cfg.constants.G, "gravitational constant");
    app.add_option("--k-B,--kB", cfg.constants.k_B, "Boltzmann constant");
    app.add_option("--N-A,--NA", cfg.constants.N_A, "Avogadro constant");
    app.add_option("--M-total,--Mtotal", cfg.constants.M_total,
                   "total mass [kg]");
    app.add_option("--R-total,--Rtotal", cfg.constants.R_total,
                   "total radius [m]");
    app.add_option("--grid", cfg.grid_points, "number of grid points (>= 2)");
    app.add_option("--x-max,--xmax", cfg.x_max,
                   "outer edge of the table in fractional radius (0, 1]");
    app.add_option("--mode", cfg.mode, "profiles|energy|luminosity|all|check")
        ->transform(CLI::CheckedTransformer(kModeNames));
    app.add_option("--out", cfg.output_path,
                   "output path for table modes; - writes to stdout");
    app.add_option("--truncation-tol,--truncationtol", cfg.truncation_tol,
                   "energy-series tail-bound target");
    app.add_option("--eta-fault,--etafault", cfg.params.eta_fault_rel,
                   "relative perturbation of the leading pressure-sum "
                   "coefficient (verification aid)");
    app.set_config("--config", "", "flat key=value config file");
    app.allow_config_extras(CLI::config_extras_mode::error);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw ConfigError(app.help(), 0);
    } catch (const CLI::ParseError& e) {
        throw ConfigError(std::string("config error: ") + e.what(), 1);
    }

    std::string violations;
    try {
        cfg.params.validate();
    } catch (const std::exception& e) {
        append_error(violations, e);
    }
    try {
        cfg.composition.validate();
    } catch (const std::exception& e) {
        append_error(violations, e);
    }
    try {
        cfg.constants.validate();
    } catch (const std::exception& e) {
        append_error(violations, e);
    }
    if (cfg.grid_points < 2)
        append_error(violations,
                     std::invalid_argument("grid must be at least 2"));
    if (!(cfg.x_max > 0.0) || cfg.x_max > 1.0)
        append_error(violations,
                     std::invalid_argument("x-max must lie in (0, 1]"));
    if (!(cfg.truncation_tol > 0.0))
        append_error(violations,
                     std::invalid_argument("truncation-tol must be positive"));
    if (!violations.empty()) throw ConfigError(violations, 1);
    return cfg;
}

TableMode table_mode_for(RunMode mode) {
    switch (mode) {
        case RunMode::energy: return TableMode::energy;
        case RunMode::luminosity: return TableMode::luminosity;
        case RunMode::all: return TableMode::all;
        default: return TableMode::profiles;
    }
}

void write_table_csv(const ProfileTable& table, std::ostream& os) {
    char buf[40];
    const auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf;
    };

    os << "x,f_D,f_M,f_P,f_T,rho,mass,pressure,temperature";
    if (table.has_energy) os << ",epsilon_direct,epsilon_expansion";
    if (table.has_luminosity) os << ",L,L_over_Lmodel";
    os << '\n';

    bool blank_direct = false;
    bool blank_expansion = false;
    for (const ProfileRow& r : table.rows) {
        num(r.x);
        os << ',';
        num(r.f_D);
        os << ',';
        num(r.f_M);
        os << ',';
        num(r.f_P);
        os << ',';
        num(r.f_T);
        os << ',';
        num(r.rho);
        os << ',';
        num(r.mass);
        os << ',';
        num(r.pressure);
        os << ',';
        num(r.temperature);
        if (table.has_energy) {
            os << ',';
            if (r.has_eps_direct)
                num(r.eps_direct);
            else
                blank_direct = true;
            os << ',';
            if (r.has_eps_expansion)
                num(r.eps_expansion);
            else
                blank_expansion = true;
        }
        if (table.has_luminosity) {
            os << ',';
            num(r.L);
            os << ',';
            num(r.L_ratio);
        }
        os << '\n';
    }

    if (blank_direct)
        os << "# epsilon_direct is blank at x = 1: the direct form diverges "
              "at the surface when m-exp > n-exp\n";
    if (blank_expansion) {
        os << "# epsilon_expansion is blank beyond x = ";
        num(table.expansion_x_max);
        os << ": outside the series truncation radius\n";
    }
    if (table.has_energy || table.has_luminosity) {
        os << "# energy series truncated at order " << table.expansion_order
           << ", tail bound ";
        num(table.expansion_tail);
        os << '\n';
    }
    if (table.has_luminosity) {
        os << "# L_over_Lmodel is normalised by the model total L(1) = ";
        num(table.L_total);
        os << " W\n";
    }
}

int run(const RunConfig& config, std::ostream& table_out, std::ostream& diag) {
    if (config.x_max > 0.3 && config.mode != RunMode::check)
        diag << "warning: x-max " << config.x_max
             << " exceeds 0.3, the fractional radius the density law is "
                "calibrated to; rows beyond it are extrapolation\n";

    if (config.mode == RunMode::check) {
        const std::vector<CheckResult> results =
            run_check_suite(config.params, config.constants,
                            config.composition, config.truncation_tol);
        std::size_t name_w = 0;
        for (const CheckResult& r : results)
            name_w = std::max(name_w, r.name.size());

        int failures = 0;
        std::ostringstream line;
        line.setf(std::ios::scientific);
        line.precision(3);
        for (const CheckResult& r : results) {
            line.str("");
            line << std::left << std::setw(static_cast<int>(name_w) + 2)
                 << r.name << std::right << std::setw(11) << r.max_rel_err
                 << "  tol " << std::setw(11) << r.tolerance << "  "
                 << (r.passed ? "pass" : "FAIL");
            table_out << line.str() << '\n';
            if (!r.passed) ++failures;
        }
        if (failures == 0) {
            table_out << "all " << results.size() << " checks passed\n";
            return 0;
        }
        table_out << failures << " of " << results.size()
                  << " checks failed\n";
        return 3;
    }

    TableRequest req;
    req.params = config.params;
    req.constants = config.constants;
    req.composition = config.composition;
    req.grid_points = config.grid_points;
    req.x_max = config.x_max;
    req.mode = table_mode_for(config.mode);
    req.truncation_tol = config.truncation_tol;

    const ProfileTable table = compute_table(req, /*parallel=*/true);
    write_table_csv(table, table_out);
    return 0;
}

} // namespace sunstruct
