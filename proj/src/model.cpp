#include <sunstruct/model.hpp>
#include <sunstruct/specfun.hpp>

#include <cmath>
#include <string>

namespace sunstruct {

void ModelParams::validate() const {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw std::invalid_argument("delta must be positive and finite");
    }
    if (gamma < 1 || gamma > kMaxPolyDegree) {
        throw std::invalid_argument("gamma must be an integer in [1, " +
                                    std::to_string(kMaxPolyDegree) + "]");
    }
    if (n_exp < 0) throw std::invalid_argument("n_exp must be >= 0");
    if (m_exp < n_exp) {
        throw std::invalid_argument("m_exp must be >= n_exp (burning rate must not "
                                    "grow toward the surface)");
    }
    if (!(epsilon0 > 0.0) || !std::isfinite(epsilon0)) {
        throw std::invalid_argument("epsilon0 must be positive and finite");
    }
    if (!std::isfinite(eta_fault_rel)) {
        throw std::invalid_argument("eta fault perturbation must be finite");
    }
}

void Composition::validate() const {
    if (!(X >= 0.0) || !(Y >= 0.0) || !(Z >= 0.0)) {
        throw std::invalid_argument("mass fractions must be nonnegative");
    }
    if (std::abs(X + Y + Z - 1.0) > 1e-12) {
        throw std::invalid_argument("mass fractions must sum to 1");
    }
    // mu = 1 / (2X + 3Y/4 + Z/2) requires a nonzero denominator; any
    // nonnegative triple summing to 1 gives one >= 1/2.
}

void PhysicalConstants::validate() const {
    if (!(G > 0.0) || !(k_B > 0.0) || !(N_A > 0.0)) {
        throw std::invalid_argument("physical constants must be positive");
    }
    if (!(M_total > 0.0) || !(R_total > 0.0)) {
        throw std::invalid_argument("stellar mass and radius must be positive");
    }
}

} // namespace sunstruct
