#pragma once

/*
 * grid.hpp -- profile-table evaluation over a uniform radius grid.
 *
 * Rows are mutually independent, so the table fills either serially or
 * with an OpenMP parallel-for over points.  Both paths call the same
 * per-row routine and write by index into a preallocated vector, which
 * makes their outputs bit-identical; the serial path is the reference
 * the parallel one is tested against.
 */

#include <sunstruct/energy.hpp>
#include <sunstruct/luminosity.hpp>
#include <sunstruct/model.hpp>

#include <vector>

namespace sunstruct {

enum class TableMode { profiles, energy, luminosity, all };

struct TableRequest {
    ModelParams params;
    PhysicalConstants constants;
    Composition composition;
    int grid_points = 256;       // >= 2, endpoints included
    double x_max = 1.0;          // grid spans [0, x_max]
    TableMode mode = TableMode::profiles;
    double truncation_tol = 1e-8;
};

struct ProfileRow {
    double x;
    double f_D, f_M, f_P, f_T;
    double rho, mass, pressure, temperature;
    double eps_direct = 0.0;
    double eps_expansion = 0.0;
    double L = 0.0;
    double L_ratio = 0.0;
    bool has_eps_direct = false;     // false: column blank (divergent at x=1)
    bool has_eps_expansion = false;  // false: outside the expansion radius
};

struct ProfileTable {
    std::vector<ProfileRow> rows;
    CentralValues cv;
    bool has_energy = false;
    bool has_luminosity = false;
    double L_total = 0.0;
    // Expansion build record (energy or luminosity modes).
    int expansion_order = 0;
    double expansion_tail = 0.0;
    double expansion_x_max = 0.0;
};

ProfileTable compute_table(const TableRequest& req, bool parallel);

} // namespace sunstruct
