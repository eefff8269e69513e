#include "mpseries.hpp"

#include <sunstruct/specfun.hpp>

#include <cmath>
#include <stdexcept>

namespace sunstruct {

std::shared_ptr<const detail::MpTable> ExpansionBackend::table_at(
    mpfr_prec_t prec) const {
    std::lock_guard<std::mutex> lock(mp_mutex_);
    auto it = mp_tables_.find(prec);
    if (it != mp_tables_.end()) return it->second;

    detail::PrecisionGuard guard(prec);
    auto built = detail::expansion_buckets<detail::mpreal>(params, truncation_S);
    auto table = std::make_shared<detail::MpTable>();
    table->prec = prec;
    table->coeff.reserve(built.size());
    table->mass.reserve(built.size());
    for (auto& t : built) {
        table->coeff.push_back(std::move(t.coeff));
        table->mass.push_back(std::move(t.mass));
    }
    if (table->coeff.size() != terms.size()) {
        throw std::logic_error("expansion backend: precision rebuild changed term count");
    }
    mp_tables_.emplace(prec, table);
    return mp_tables_.at(prec);
}

namespace detail {

std::shared_ptr<const ExpansionBackend> build_expansion_backend(
    const ModelParams& p, int S) {
    // Built in place: the table mutex makes the type immovable.
    auto b = std::make_shared<ExpansionBackend>();
    b->params = p;
    b->truncation_S = S;
    auto built = expansion_buckets<ddouble>(p, S);
    b->terms.reserve(built.size());
    for (const auto& t : built)
        b->terms.push_back({t.coeff, to_double(t.mass), t.zpow, t.q});
    return b;
}

SeriesEvalDD eval_series_dd(const ExpansionBackend& b, double x) {
    const ddouble z(std::pow(x, b.params.delta));
    const ddouble x2 = ddouble(x) * ddouble(x);
    ddouble sum(0.0);
    double abs_mass = 0.0;

    int cur_q = 0;
    ddouble xq(1.0);
    ddouble zcur(1.0);
    int cur_zpow = 0;
    for (const auto& t : b.terms) {
        while (cur_q < t.q) {
            xq *= x2;
            ++cur_q;
            zcur = ddouble(1.0);
            cur_zpow = 0;
        }
        while (cur_zpow < t.zpow) {
            zcur *= z;
            ++cur_zpow;
        }
        ddouble v = t.coeff * zcur * xq;
        sum += v;
        // The construction mass, not |v|: each bucket coefficient is
        // itself a pre-cancelled sum, and the rounding it carries scales
        // with what was folded in, not with what is left.
        abs_mass += t.cmass * to_double(zcur) * to_double(xq);
    }
    return {to_double(sum), abs_mass};
}

namespace {

// Accumulated double-double rounding is bounded by roughly
// (term count) * 2^-106 * (term mass); 1e-29 covers every table size the
// parameter validation admits.
constexpr double kDdRoundingUnit = 1e-29;
constexpr double kSeriesRelTarget = 1e-9;

// The luminosity factors are seeded from std::pow, so each carries a
// near-common ~1e-16 relative error on top of the dd accumulation.
constexpr double kLumRoundingUnit = 4e-16;

mpfr_prec_t next_precision(long deficit_bits) {
    long want = deficit_bits + 140;
    return static_cast<mpfr_prec_t>(((want + 63) / 64) * 64);
}

} // namespace

double eval_series_mp(const ExpansionBackend& b, double x) {
    const double zd = std::pow(x, b.params.delta);
    mpfr_prec_t prec = 320;
    for (int round = 0; round < 32; ++round) {
        auto table = b.table_at(prec);
        PrecisionGuard guard(prec);
        const mpreal z(zd);
        const mpreal xm(x);
        const mpreal x2 = xm * xm;

        mpreal sum(0.0);
        mpreal mass(0.0);
        int cur_q = 0;
        mpreal xq(1.0);
        mpreal zcur(1.0);
        int cur_zpow = 0;
        for (std::size_t i = 0; i < b.terms.size(); ++i) {
            const auto& t = b.terms[i];
            while (cur_q < t.q) {
                xq = xq * x2;
                ++cur_q;
                zcur = mpreal(1.0);
                cur_zpow = 0;
            }
            while (cur_zpow < t.zpow) {
                zcur = zcur * z;
                ++cur_zpow;
            }
            mpreal v = table->coeff[i] * zcur * xq;
            sum = sum + v;
            // Judge the achieved precision against the construction mass:
            // the rebuilt coefficients carry rounding proportional to what
            // was folded into them, not to their cancelled remainders.
            mass = mass + table->mass[i] * zcur * xq;
        }
        if (mass.is_zero()) return 0.0;
        if (sum.is_zero()) {
            prec = next_precision(mass.exp2() + prec);
            continue;
        }
        long cancelled = mass.exp2() - sum.exp2();
        if (prec >= cancelled + 80) return sum.to_double();
        prec = next_precision(cancelled);
    }
    throw std::runtime_error("series evaluation: precision escalation did not settle");
}

double eval_series_auto(const ExpansionBackend& b, double x) {
    SeriesEvalDD dd = eval_series_dd(b, x);
    if (dd.abs_mass * kDdRoundingUnit <= std::abs(dd.value) * kSeriesRelTarget) {
        return dd.value;
    }
    return eval_series_mp(b, x);
}

SeriesEvalDD eval_lum_dd(const ExpansionBackend& b, double x) {
    const int gamma = b.params.gamma;
    const double delta = b.params.delta;
    const double z = std::pow(x, delta);
    const int bexp = gamma + 1;

    ddouble total(0.0);
    double abs_mass = 0.0;

    // Per q bucket, walk the beta factors downward from the largest
    // z-exponent:
    //   B_z(a, b) = ((a + b) B_z(a+1, b) + z^a (1-z)^b) / a.
    // Every addition is positive, so the walk is stable; the top factor
    // may underflow to 0 harmlessly (its true size is below double range
    // and the recurrence regenerates significance on the way down).  The
    // z^a chain is reseeded from pow while it sits under the normal
    // range, since 0/z would otherwise stay 0 forever.
    std::size_t i1 = b.terms.size();
    while (i1 > 0) {
        std::size_t i0 = i1;
        const int q = b.terms[i1 - 1].q;
        while (i0 > 0 && b.terms[i0 - 1].q == q) --i0;

        const double s0 = (3.0 + 2.0 * q) / delta;
        int j = b.terms[i1 - 1].zpow;

        // Seed with the lower series, never the routed complement: at
        // z-exponents this large the complete and upper beta agree to far
        // more digits than double-double holds, and their difference is
        // noise (of either sign).  The lower series stays benign at any
        // s, the 1/(s+l) damping mutes its alternation.
        ddouble F = ibeta_lower_dd(gamma, s0 + j, z);
        const ddouble omzb = dd_powi(two_sum(1.0, -z), bexp);
        ddouble pw(std::pow(z, s0 + j));

        for (std::size_t i = i1; i-- > i0;) {
            const auto& t = b.terms[i];
            while (j > t.zpow) {
                --j;
                const ddouble a = two_sum(s0, static_cast<double>(j));
                pw = pw / z;
                if (pw.hi < 1e-300) pw = ddouble(std::pow(z, s0 + j));
                F = (F * two_sum(s0, static_cast<double>(j + bexp)) + pw * omzb) / a;
            }
            total += t.coeff * F;
            abs_mass += t.cmass * to_double(F);
        }
        i1 = i0;
    }
    return {to_double(total), abs_mass};
}

namespace {

// int_0^z (1-v)^gamma v^(s-1) dv = zfac * sum_l (-gamma)_l/l! z^l/(s+l),
// with zfac = z^s supplied by the caller (hoisted: z^s factors across the
// term loop as z^zpow * z^((3+2q)/delta)).
mpreal ibeta_series_mp(int gamma, const mpreal& s, const mpreal& z) {
    mpreal sum(0.0);
    mpreal coef(1.0);
    for (int l = 0; l <= gamma; ++l) {
        sum = sum + coef / (s + mpreal(static_cast<double>(l)));
        if (l < gamma) {
            coef = coef * static_cast<double>(l - gamma) / static_cast<double>(l + 1) * z;
        }
    }
    return sum;
}

mpreal beta_complete_mp(int gamma, const mpreal& s) {
    mpreal b = mpreal(1.0) / s;
    for (int i = 1; i <= gamma; ++i) {
        b = b * static_cast<double>(i) / (s + mpreal(static_cast<double>(i)));
    }
    return b;
}

// Shared escalation loop for the two luminosity sums.  `at_one` switches
// the per-term factor between the incomplete beta at z and the complete
// beta value (the Gauss-summation path).  For z < 1 the factors come from
// a per-bucket downward walk,
//   B_z(a, b) = ((a + b) B_z(a+1, b) + z^a (1-z)^b) / a,
// seeded with the lower series at the largest z-exponent: positive
// additions all the way, a handful of operations per term instead of a
// fresh series.
double eval_lum_mp(const ExpansionBackend& b, double x, bool at_one) {
    const int gamma = b.params.gamma;
    const double delta = b.params.delta;
    const double zd = at_one ? 1.0 : std::pow(x, delta);
    const int bexp = gamma + 1;

    mpfr_prec_t prec = 320;
    for (int round = 0; round < 32; ++round) {
        auto table = b.table_at(prec);
        PrecisionGuard guard(prec);
        const mpreal z(zd);
        const mpreal omzb = pow(mpreal(1.0) - z, mpreal(static_cast<double>(bexp)));

        mpreal sum(0.0);
        mpreal mass(0.0);
        std::size_t i1 = b.terms.size();
        while (i1 > 0) {
            std::size_t i0 = i1;
            const int q = b.terms[i1 - 1].q;
            while (i0 > 0 && b.terms[i0 - 1].q == q) --i0;

            const mpreal s0 = mpreal(static_cast<double>(3 + 2 * q)) / delta;
            int j = b.terms[i1 - 1].zpow;

            mpreal a = s0 + mpreal(static_cast<double>(j));
            mpreal F(0.0);
            mpreal pw(0.0);
            if (at_one) {
                F = beta_complete_mp(gamma, a);
            } else {
                pw = pow(z, a);
                F = ibeta_series_mp(gamma, a, z) * pw;
            }

            for (std::size_t i = i1; i-- > i0;) {
                const auto& t = b.terms[i];
                while (j > t.zpow) {
                    --j;
                    a = s0 + mpreal(static_cast<double>(j));
                    if (at_one) {
                        F = F * (a + mpreal(static_cast<double>(bexp))) / a;
                    } else {
                        pw = pw / z;
                        F = (F * (a + mpreal(static_cast<double>(bexp))) +
                             pw * omzb) / a;
                    }
                }
                sum = sum + table->coeff[i] * F;
                mass = mass + table->mass[i] * F;
            }
            i1 = i0;
        }
        if (mass.is_zero()) return 0.0;
        if (sum.is_zero()) {
            prec = next_precision(mass.exp2() + prec);
            continue;
        }
        long cancelled = mass.exp2() - sum.exp2();
        if (prec >= cancelled + 80) return sum.to_double();
        prec = next_precision(cancelled);
    }
    throw std::runtime_error("luminosity evaluation: precision escalation did not settle");
}

} // namespace

double eval_lum_profile_mp(const ExpansionBackend& b, double x) {
    if (x == 0.0) return 0.0;
    return eval_lum_mp(b, x, false);
}

double eval_lum_profile_auto(const ExpansionBackend& b, double x) {
    if (x == 0.0) return 0.0;
    SeriesEvalDD dd = eval_lum_dd(b, x);
    if (dd.abs_mass >= 0.0 &&
        dd.abs_mass * kLumRoundingUnit <= std::abs(dd.value) * kSeriesRelTarget) {
        return dd.value;
    }
    return eval_lum_mp(b, x, false);
}

double eval_lum_total_mp(const ExpansionBackend& b) {
    return eval_lum_mp(b, 0.0, true);
}

} // namespace detail

} // namespace sunstruct
