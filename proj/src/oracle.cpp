#include <sunstruct/oracle.hpp>

#include <sunstruct/profiles.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sunstruct {

namespace {

// Gauss-Kronrod 15(7) nodes and weights on [-1,1] (positive half; the
// rule is symmetric).  Even-indexed nodes are Kronrod-only, odd-indexed
// nodes carry the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelResult {
    double kronrod;
    double err;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b,
                 long* evals) {
    const double hw = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(mid - hw * kXgk[i]);
        fv[14 - i] = f(mid + hw * kXgk[i]);
    }
    fv[7] = f(mid);
    *evals += 15;

    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        resk += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) resg += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    return {resk * hw, std::abs((resk - resg) * hw)};
}

struct Interval {
    double a, b, value, err;
    int depth;
};

} // namespace

QuadResult quad_integrate(const std::function<double(double)>& f, double a,
                          double b, const QuadOptions& opt) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    PanelResult first = gk15(f, a, b, &out.evaluations);
    std::vector<Interval> heap{{a, b, first.kronrod, first.err, 0}};
    double total = first.kronrod;
    double total_err = first.err;

    auto tol = [&](double t) {
        return std::max(opt.abs_tol, opt.rel_tol * std::abs(t));
    };

    while (total_err > tol(total) &&
           static_cast<int>(heap.size()) < opt.max_intervals) {
        // Split the interval with the largest error estimate.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < heap.size(); ++i) {
            if (heap[i].err > heap[worst].err) worst = i;
        }
        Interval iv = heap[worst];
        if (iv.depth >= opt.max_depth) break;

        double mid = 0.5 * (iv.a + iv.b);
        PanelResult left = gk15(f, iv.a, mid, &out.evaluations);
        PanelResult right = gk15(f, mid, iv.b, &out.evaluations);

        total += left.kronrod + right.kronrod - iv.value;
        total_err += left.err + right.err - iv.err;

        heap[worst] = {iv.a, mid, left.kronrod, left.err, iv.depth + 1};
        heap.push_back({mid, iv.b, right.kronrod, right.err, iv.depth + 1});
    }

    out.value = total;
    out.err_est = total_err;
    out.converged = total_err <= tol(total);
    return out;
}

namespace {

double shell_mass_integral(double x, const ModelParams& p, const QuadOptions& opt) {
    return quad_integrate([&p](double t) { return t * t * f_density(t, p); },
                          0.0, x, opt)
        .value;
}

} // namespace

double quad_mass_fraction(double x, const ModelParams& p) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("quad_mass_fraction: x must lie in [0,1]");
    }
    QuadOptions opt;
    opt.rel_tol = 1e-13;
    opt.abs_tol = 0.0;
    if (x == 0.0) return 0.0;
    return shell_mass_integral(x, p, opt) / shell_mass_integral(1.0, p, opt);
}

double quad_pressure_dimless(double x, const ModelParams& p) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("quad_pressure_dimless: x must lie in [0,1]");
    }
    // Inner and outer tolerances are purely relative: near the surface
    // the integrand drops by many orders of magnitude and any fixed
    // absolute floor would swamp it.
    QuadOptions inner;
    inner.rel_tol = 1e-13;
    inner.abs_tol = 0.0;
    QuadOptions outer;
    outer.rel_tol = 1e-12;
    outer.abs_tol = 0.0;

    const double norm = shell_mass_integral(1.0, p, inner);
    auto integrand = [&](double t) {
        if (t <= 0.0) return 0.0;
        return shell_mass_integral(t, p, inner) * f_density(t, p) / (t * t);
    };
    double j = quad_integrate(integrand, x, 1.0, outer).value;
    return j / (9.0 * norm * norm);
}

double quad_luminosity(double x, const ModelParams& p, double rho_c,
                       double R_total,
                       const std::function<double(double)>& eps) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("quad_luminosity: x must lie in [0,1]");
    }
    if (x == 0.0) return 0.0;
    // Stop just short of the surface: the burning-rate quotient is 0/0
    // there when m > n.  Near x = 1 the integrand vanishes like
    // (1 - x^delta)^(gamma + m + gamma n), so the clipped sliver of width
    // 1e-9 contributes far below the quadrature tolerance.
    const double hi = std::min(x, 1.0 - 1e-9);
    QuadOptions opt;
    opt.rel_tol = 1e-12;
    opt.abs_tol = 0.0;
    auto integrand = [&](double t) {
        return t * t * rho_c * f_density(t, p) * eps(t);
    };
    double core = quad_integrate(integrand, 0.0, hi, opt).value;
    return 4.0 * std::numbers::pi * R_total * R_total * R_total * core;
}

double half_peak_radius(const std::function<double(double)>& f, double ratio) {
    if (!(ratio > 0.0 && ratio < 1.0)) {
        throw std::invalid_argument("half_peak_radius: ratio must lie in (0,1)");
    }
    const double target = ratio * f(0.0);
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace sunstruct
