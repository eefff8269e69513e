#pragma once

/*
 * series.hpp -- generic builders for the model's polynomial data.
 *
 * The same coefficient constructions are needed twice: once in
 * double-double for the fast path and once in MPFR for the arbitrary-
 * precision fallback.  To guarantee the two paths evaluate the *same*
 * mathematical object they share these templates, parameterized over the
 * number type.
 *
 * Real must be constructible from double and support +, -, * and / with
 * both Real and double operands.
 *
 * Objects built here, for density law (1 - z)^gamma with z = x^delta:
 *
 *   binomial_coefficients   C_m = (-gamma)_m / m! = (-1)^m binom(gamma, m)
 *   h_coefficients          a_j of h(x) = sum_j a_j z^j, where
 *                           1 - P/P_c = x^2 h(x) / eta
 *   eta_sum                 eta(gamma, delta) = h(1), the central-pressure
 *                           normalization (carries the fault hook)
 *   expansion_buckets       coefficients of the truncated power-series
 *                           form of eps/eps_c, bucketed by (z-power, q)
 *
 * Signs: a_j = (-1)^j |a_j| (every summand of a_j carries the same sign),
 * so none of the sums below cancel internally; cancellation only appears
 * when the series are *evaluated*, which is the callers' problem.
 */

#include <sunstruct/model.hpp>

#include <vector>

namespace sunstruct::detail {

template <class Real>
std::vector<Real> binomial_coefficients(int gamma) {
    std::vector<Real> c;
    c.reserve(gamma + 1);
    c.emplace_back(1.0);
    for (int m = 0; m < gamma; ++m) {
        // Recurrence keeps full precision; binom(64,32) needs 61 bits and
        // would round if formed as a plain double.
        c.push_back(c.back() * static_cast<double>(m - gamma) /
                    static_cast<double>(m + 1));
    }
    return c;
}

// Complete beta B(s, gamma+1) as the overflow-free interleaved product.
template <class Real>
Real beta_complete_t(int gamma, double s) {
    Real b = Real(1.0) / s;
    for (int i = 1; i <= gamma; ++i) b = b * static_cast<double>(i) / (s + i);
    return b;
}

template <class Real>
std::vector<Real> h_coefficients(const ModelParams& p) {
    const double ti = 3.0 / p.delta;  // "three over delta"
    const double tw = 2.0 / p.delta;
    std::vector<Real> c = binomial_coefficients<Real>(p.gamma);
    std::vector<Real> a;
    a.reserve(2 * p.gamma + 1);
    for (int j = 0; j <= 2 * p.gamma; ++j) {
        Real acc(0.0);
        int lo = j > p.gamma ? j - p.gamma : 0;
        int hi = j < p.gamma ? j : p.gamma;
        for (int m1 = lo; m1 <= hi; ++m1) {
            acc = acc + c[m1] * c[j - m1] / (ti + m1);
        }
        a.push_back(acc / (tw + j));
    }
    return a;
}

template <class Real>
Real eta_sum(const ModelParams& p) {
    const double ti = 3.0 / p.delta;
    const double tw = 2.0 / p.delta;
    std::vector<Real> c = binomial_coefficients<Real>(p.gamma);
    Real s(0.0);
    for (int nu = 0; nu <= p.gamma; ++nu) {
        Real term = c[nu] / (ti + nu) * beta_complete_t<Real>(p.gamma, tw + nu);
        if (nu == 0 && p.eta_fault_rel != 0.0) {
            term = term * (1.0 + p.eta_fault_rel);
        }
        s = s + term;
    }
    return s;
}

template <class Real>
std::vector<Real> convolve(const std::vector<Real>& a, const std::vector<Real>& b) {
    std::vector<Real> r(a.size() + b.size() - 1, Real(0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = r[i + j] + a[i] * b[j];
        }
    }
    return r;
}

// One coefficient of the truncated eps/eps_c power series.  The full term
// is coeff * x^(2q) * z^zpow, i.e. x^(delta*zpow + 2q).  mass is the sum
// of |summand| over everything folded into coeff; evaluation needs it to
// judge how much cancellation already happened during construction.
template <class Real>
struct BucketTerm {
    Real coeff;
    Real mass;
    int zpow;
    int q;
};

// Expand  (1 - x^2 h / eta)^m * (1 - z)^(-alpha),  alpha = gamma (m - n),
// with the binomial series of the second factor truncated after z^S.
// Terms come out grouped by q (the power of x^2 h / eta) and ascending
// zpow within each group.
template <class Real>
std::vector<BucketTerm<Real>> expansion_buckets(const ModelParams& p, int S) {
    const int alpha = p.gamma * (p.m_exp - p.n_exp);
    std::vector<Real> afac;
    afac.reserve(S + 1);
    afac.emplace_back(1.0);
    for (int s = 0; s < S; ++s) {
        afac.push_back(afac.back() * static_cast<double>(alpha + s) /
                       static_cast<double>(s + 1));
    }

    const Real eta = eta_sum<Real>(p);
    const std::vector<Real> h = h_coefficients<Real>(p);

    std::vector<BucketTerm<Real>> out;
    std::vector<Real> hq{Real(1.0)};  // h^q, starting at q = 0
    Real cq(1.0);                     // (-m)_q / q! * eta^(-q)
    for (int q = 0; q <= p.m_exp; ++q) {
        std::vector<Real> bucket(hq.size() - 1 + S + 1, Real(0.0));
        std::vector<Real> mass(bucket.size(), Real(0.0));
        for (std::size_t k = 0; k < hq.size(); ++k) {
            Real base = cq * hq[k];
            // |base|: cq carries (-1)^q, hq[k] carries (-1)^k, with no
            // further sign variation inside either (see header note), so
            // the parity of q + k fixes the sign exactly.
            Real abs_base = ((q + k) % 2 == 0) ? base : Real(0.0) - base;
            for (int s = 0; s <= S; ++s) {
                bucket[k + s] = bucket[k + s] + base * afac[s];
                mass[k + s] = mass[k + s] + abs_base * afac[s];
            }
        }
        for (std::size_t zp = 0; zp < bucket.size(); ++zp) {
            out.push_back({bucket[zp], mass[zp], static_cast<int>(zp), q});
        }
        if (q < p.m_exp) {
            hq = convolve(hq, h);
            cq = cq * static_cast<double>(q - p.m_exp) / static_cast<double>(q + 1) / eta;
        }
    }
    return out;
}

} // namespace sunstruct::detail
