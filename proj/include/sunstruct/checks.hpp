#pragma once

/*
 * checks.hpp -- end-to-end consistency suite.
 *
 * Every closed-form quantity the library produces is re-derived here
 * through an independent route (adaptive quadrature over the density law,
 * closed-form identities, or a second algebraic path) and the worst
 * relative deviation is compared against a pinned tolerance.  The suite
 * backs the command-line check mode and is deliberately sensitive to
 * single-coefficient perturbations of the pressure normalisation.
 */

#include <sunstruct/model.hpp>

#include <string>
#include <vector>

namespace sunstruct {

struct CheckResult {
    std::string name;
    double max_rel_err;  // worst deviation observed, relative unless noted
    double tolerance;
    bool passed;
};

std::vector<CheckResult> run_check_suite(const ModelParams& params,
                                         const PhysicalConstants& constants,
                                         const Composition& composition,
                                         double truncation_tol = 1e-8);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace sunstruct
