#include <sunstruct/energy.hpp>

#include <sunstruct/profiles.hpp>

#include "mpseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sunstruct {

namespace {

void require_unit_interval(double x, const char* who) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error(std::string(who) + ": x must lie in [0,1]");
    }
}

// Tail of the binomial series sum_s (alpha)_s/s! zm^s past order S, by the
// ratio test (term ratios decrease monotonically, so the first ratio
// bounds the geometric remainder).  Log-space: the running term can
// transit far above 1 before decaying for large alpha*zm.
double binomial_tail_bound(int alpha, int S, double zm) {
    if (alpha == 0 || zm == 0.0) return 0.0;
    double lt = 0.0;  // log t_{S+1}
    for (int s = 0; s <= S; ++s) {
        lt += std::log((alpha + s) / (s + 1.0)) + std::log(zm);
    }
    double ratio = zm * (alpha + S + 1.0) / (S + 2.0);
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
    return std::exp(lt) / (1.0 - ratio);
}

void validate_options(const ExpansionOptions& opts) {
    if (!(opts.x_max > 0.0 && opts.x_max <= 1.0)) {
        throw std::invalid_argument("expansion x_max must lie in (0,1]");
    }
    if (!(opts.tail_tol > 0.0)) {
        throw std::invalid_argument("expansion tail tolerance must be positive");
    }
}

} // namespace

HPolynomial h_polynomial(const ModelParams& p) {
    p.validate();
    auto dd = detail::h_coefficients<detail::ddouble>(p);
    HPolynomial h;
    h.coeffs.reserve(dd.size());
    for (auto& c : dd) h.coeffs.push_back(to_double(c));
    return h;
}

double pressure_ratio(double x, const ModelParams& p) {
    require_unit_interval(x, "pressure_ratio");
    p.validate();
    const auto a = detail::h_coefficients<detail::ddouble>(p);
    const detail::ddouble eta = detail::eta_sum<detail::ddouble>(p);
    const detail::ddouble x2 = detail::ddouble(x) * detail::ddouble(x);
    const double z = std::pow(x, p.delta);

    detail::ddouble horner(0.0);
    if (z <= 0.75) {
        for (auto it = a.rbegin(); it != a.rend(); ++it)
            horner = horner * z + *it;
    } else {
        // The ratio vanishes like (1-z)^(gamma+1) at the surface while the
        // Horner terms stay O(1), so in the z basis the rounding of z
        // alone costs all relative accuracy.  Recast h in powers of
        // w = 1 - z, where w itself comes from expm1 with full relative
        // accuracy; the shift is a Pascal-row binomial transform done in
        // double-double.
        const detail::ddouble w_neg(-detail::one_minus_pow(x, p.delta));
        const int deg = static_cast<int>(a.size()) - 1;
        std::vector<detail::ddouble> g(a.size(), detail::ddouble(0.0));
        std::vector<detail::ddouble> row(a.size(), detail::ddouble(0.0));
        row[0] = detail::ddouble(1.0);
        for (int k = 0; k <= deg; ++k) {
            if (k > 0)
                for (int j = k; j >= 1; --j) row[j] = row[j] + row[j - 1];
            for (int j = 0; j <= k; ++j) g[j] = g[j] + row[j] * a[k];
        }
        // h(z) = sum_j g_j (-w)^j
        for (int j = deg; j >= 0; --j) horner = horner * w_neg + g[j];
    }

    double r = to_double(detail::ddouble(1.0) - x2 * horner / eta);
    // The exact ratio lives in [0,1]; at the surface the computed value is
    // a rounding-level residual of either sign.
    return std::clamp(r, 0.0, 1.0);
}

namespace detail {

double epsilon_central_scale_real(double n_real, double m_real,
                                  const ModelParams& p, const CentralValues& cv) {
    return p.epsilon0 *
           std::exp(n_real * std::log(cv.rho_c) + m_real * std::log(cv.T_c));
}

double epsilon_central_scale(const ModelParams& p, const CentralValues& cv) {
    return epsilon_central_scale_real(p.n_exp, p.m_exp, p, cv);
}

std::vector<double> h_power_multinomial(const std::vector<double>& h, int q) {
    if (q < 0) throw std::invalid_argument("h_power_multinomial: q must be >= 0");
    const int d = static_cast<int>(h.size()) - 1;
    std::vector<double> out(static_cast<std::size_t>(d) * q + 1, 0.0);

    double qfact = 1.0;
    for (int i = 2; i <= q; ++i) qfact *= i;

    // Walk all occupation vectors (n_0, ..., n_d) with sum q; each
    // contributes q!/(n_0! ... n_d!) * prod h_i^{n_i} at exponent
    // sum i*n_i.
    struct Walker {
        const std::vector<double>& h;
        std::vector<double>& out;
        int d;
        void walk(int slot, int remaining, double coef, int expo) {
            if (slot == d) {
                double fact = 1.0;
                for (int i = 2; i <= remaining; ++i) fact *= i;
                out[expo + d * remaining] +=
                    coef * std::pow(h[d], remaining) / fact;
                return;
            }
            double fact = 1.0;
            for (int n = 0; n <= remaining; ++n) {
                if (n >= 2) fact *= n;
                walk(slot + 1, remaining - n,
                     coef * std::pow(h[slot], n) / fact, expo + slot * n);
            }
        }
    } w{h, out, d};
    w.walk(0, q, qfact, 0);
    return out;
}

} // namespace detail

double epsilon_direct(double x, double n_real, double m_real,
                      const ModelParams& p, const CentralValues& cv) {
    require_unit_interval(x, "epsilon_direct");
    p.validate();
    if (!(n_real >= 0.0) || !(m_real >= 0.0)) {
        throw std::invalid_argument("epsilon_direct: exponents must be >= 0");
    }
    if (x >= 1.0 && m_real > n_real) {
        throw std::domain_error(
            "epsilon_direct: diverges at x = 1 when the temperature exponent "
            "exceeds the density exponent");
    }
    // P/P_c through the beta-kernel route rather than the h polynomial:
    // the polynomial carries an absolute noise floor near the surface, and
    // raising it to the m-th power against the diverging density factor
    // would amplify that noise into the result.  The kernel stays
    // relatively accurate all the way out.
    const double z = std::pow(x, p.delta);
    const double pr = to_double(detail::pressure_kernel_dd(p, z) /
                                detail::pressure_kernel_dd(p, 0.0));
    const double om = detail::one_minus_pow(x, p.delta);
    const double e = p.gamma * (n_real - m_real);

    double pr_pow = 1.0;
    if (m_real != 0.0) {
        pr_pow = pr == 0.0 ? 0.0 : std::exp(m_real * std::log(pr));
    }
    double om_pow = 1.0;
    if (e != 0.0) {
        om_pow = om == 0.0 ? 0.0 : std::exp(e * std::log(om));
    }
    return detail::epsilon_central_scale_real(n_real, m_real, p, cv) * pr_pow * om_pow;
}

double epsilon_direct(double x, const ModelParams& p, const CentralValues& cv) {
    return epsilon_direct(x, static_cast<double>(p.n_exp),
                          static_cast<double>(p.m_exp), p, cv);
}

int choose_truncation_order(const ModelParams& p, const ExpansionOptions& opts) {
    p.validate();
    validate_options(opts);
    const int alpha = p.gamma * (p.m_exp - p.n_exp);
    if (alpha == 0) return 0;
    const double zm = std::pow(opts.x_max, p.delta);
    double lt = std::log(static_cast<double>(alpha)) + std::log(zm);  // log t_1
    for (int S = 0; S < 100000; ++S) {
        double ratio = zm * (alpha + S + 1.0) / (S + 2.0);
        if (ratio < 1.0 && std::exp(lt) / (1.0 - ratio) <= opts.tail_tol) {
            return S;
        }
        // advance log t_{S+1} -> log t_{S+2}
        lt += std::log((alpha + S + 1.0) / (S + 2.0)) + std::log(zm);
    }
    throw std::invalid_argument(
        "choose_truncation_order: no order below 100000 meets the tail "
        "tolerance at the requested x_max");
}

PowerTermExpansion epsilon_expansion(const ModelParams& p, int truncation_S,
                                     const ExpansionOptions& opts) {
    p.validate();
    validate_options(opts);
    if (truncation_S < 0) {
        throw std::invalid_argument("epsilon_expansion: truncation order must be >= 0");
    }
    const int alpha = p.gamma * (p.m_exp - p.n_exp);
    const double zm = std::pow(opts.x_max, p.delta);
    double tail = binomial_tail_bound(alpha, truncation_S, zm);
    if (!(tail <= opts.tail_tol)) {
        throw std::invalid_argument(
            "epsilon_expansion: tail bound " + std::to_string(tail) +
            " at x_max=" + std::to_string(opts.x_max) + " exceeds tolerance " +
            std::to_string(opts.tail_tol) + "; raise S");
    }
    // Term table size: sum over q of (S + 2 gamma q + 1).  Guard against
    // parameter combinations that would make construction intractable.
    long count = 0;
    for (int q = 0; q <= p.m_exp; ++q) {
        count += truncation_S + 2L * p.gamma * q + 1;
    }
    if (count > 4000000L) {
        throw std::invalid_argument(
            "epsilon_expansion: term table would need " + std::to_string(count) +
            " entries; reduce gamma, m_exp, or the truncation order");
    }

    auto backend = detail::build_expansion_backend(p, truncation_S);

    PowerTermExpansion e;
    e.truncation_order = truncation_S;
    e.tail_bound = tail;
    e.x_max = opts.x_max;
    e.params = p;
    e.terms.reserve(backend->terms.size());
    for (const auto& t : backend->terms) {
        // Merged representation: the combined z-exponent rides in s,
        // multi_exponent 0 (see header note on the s* invariance).
        e.terms.push_back({to_double(t.coeff), t.zpow, t.q, 0,
                           p.delta * t.zpow + 2.0 * t.q});
    }
    e.backend = std::move(backend);
    return e;
}

double epsilon_from_expansion(double x, const PowerTermExpansion& e,
                              const CentralValues& cv, const ModelParams& p) {
    if (!(x >= 0.0)) {
        throw std::domain_error("epsilon_from_expansion: x must be >= 0");
    }
    if (x > e.x_max * (1.0 + 1e-12)) {
        throw std::domain_error(
            "epsilon_from_expansion: x exceeds the validity radius the "
            "expansion was built for");
    }
    if (!e.backend) {
        throw std::invalid_argument("epsilon_from_expansion: expansion has no backend");
    }
    return detail::epsilon_central_scale(p, cv) *
           detail::eval_series_auto(*e.backend, x);
}

} // namespace sunstruct
