#include <sunstruct/grid.hpp>
#include <sunstruct/profiles.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sunstruct {

namespace {

bool wants_energy(TableMode m) {
    return m == TableMode::energy || m == TableMode::all;
}

bool wants_luminosity(TableMode m) {
    return m == TableMode::luminosity || m == TableMode::all;
}

struct RowContext {
    const ModelParams& params;
    const PhysicalConstants& constants;
    const CentralValues& cv;
    const PowerTermExpansion* expansion;      // null when no energy/luminosity columns
    const LuminosityTermSet* lum;             // null when no luminosity columns
    double L_total;
    bool energy_cols;
    bool lum_cols;
};

ProfileRow evaluate_row(double x, const RowContext& ctx) {
    ProfileRow row;
    row.x = x;
    row.f_D = f_density(x, ctx.params);
    row.f_M = f_mass(x, ctx.params);
    row.f_P = f_pressure(x, ctx.params);
    row.f_T = f_temperature(x, ctx.params);

    const PhysicalPoint pt =
        physical_profiles(x, ctx.params, ctx.constants, ctx.cv);
    row.rho = pt.rho;
    row.mass = pt.mass;
    row.pressure = pt.pressure;
    row.temperature = pt.temperature;

    if (ctx.energy_cols) {
        // The direct form has a removable 0^0 only when the density factor
        // drops out (m == n); otherwise it diverges at the surface and the
        // cell stays blank.
        if (x < 1.0 || ctx.params.m_exp == ctx.params.n_exp) {
            row.eps_direct = epsilon_direct(x, ctx.params, ctx.cv);
            row.has_eps_direct = true;
        }
        if (ctx.expansion != nullptr &&
            x <= ctx.expansion->x_max * (1.0 + 1e-12)) {
            row.eps_expansion =
                epsilon_from_expansion(x, *ctx.expansion, ctx.cv, ctx.params);
            row.has_eps_expansion = true;
        }
    }

    if (ctx.lum_cols && ctx.lum != nullptr) {
        row.L = luminosity_profile(x, *ctx.lum);
        row.L_ratio = row.L / ctx.L_total;
    }
    return row;
}

} // namespace

ProfileTable compute_table(const TableRequest& req, bool parallel) {
    req.params.validate();
    req.constants.validate();
    req.composition.validate();
    if (req.grid_points < 2)
        throw std::invalid_argument("grid_points must be at least 2");
    if (!(req.x_max > 0.0) || req.x_max > 1.0)
        throw std::invalid_argument("x_max must lie in (0, 1]");
    if (!(req.truncation_tol > 0.0))
        throw std::invalid_argument("truncation_tol must be positive");

    ProfileTable table;
    table.cv = central_values(req.params, req.constants, req.composition);
    table.has_energy = wants_energy(req.mode);
    table.has_luminosity = wants_luminosity(req.mode);

    PowerTermExpansion expansion;
    LuminosityTermSet lum;
    const bool need_expansion = table.has_energy || table.has_luminosity;
    if (need_expansion) {
        // The luminosity integral runs over all of [0, 1], so the series is
        // truncated against a build radius no smaller than 0.5 even when the
        // displayed grid stops earlier.  Cap at 0.9: beyond that the ratio
        // test forces the order up sharply while the integrand mass outside
        // is already negligible.
        ExpansionOptions opts;
        opts.x_max = std::clamp(req.x_max, 0.5, 0.9);
        opts.tail_tol = req.truncation_tol;
        const int order = choose_truncation_order(req.params, opts);
        expansion = epsilon_expansion(req.params, order, opts);
        table.expansion_order = order;
        table.expansion_tail = expansion.tail_bound;
        table.expansion_x_max = expansion.x_max;
    }
    if (table.has_luminosity) {
        lum = build_luminosity_terms(expansion, req.params, req.constants,
                                     table.cv);
        table.L_total = total_luminosity(lum, req.params);
    }

    RowContext ctx{req.params,
                   req.constants,
                   table.cv,
                   need_expansion ? &expansion : nullptr,
                   table.has_luminosity ? &lum : nullptr,
                   table.L_total,
                   table.has_energy,
                   table.has_luminosity};

    const int n = req.grid_points;
    table.rows.resize(static_cast<std::size_t>(n));
    const double step = req.x_max / static_cast<double>(n - 1);

    if (parallel) {
#ifdef _OPENMP
        // Rows near the surface escalate precision and cost more, hence the
        // dynamic schedule.  Output is written by index, so the result is
        // byte-identical to the serial path.
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) {
            const double x = (i == n - 1) ? req.x_max : step * i;
            table.rows[static_cast<std::size_t>(i)] = evaluate_row(x, ctx);
        }
#else
        parallel = false;
#endif
    }
    if (!parallel) {
        for (int i = 0; i < n; ++i) {
            const double x = (i == n - 1) ? req.x_max : step * i;
            table.rows[static_cast<std::size_t>(i)] = evaluate_row(x, ctx);
        }
    }
    return table;
}

} // namespace sunstruct
