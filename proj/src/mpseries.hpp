#pragma once

/*
 * mpseries.hpp -- arbitrary-precision backend for the expansion series.
 *
 * The power-series form of eps/eps_c and the luminosity term sum are
 * alternating series whose term mass can exceed the result by far more
 * than double-double's ~32 digits (the worst admissible parameter sets
 * need hundreds of bits near z = 1).  This file wraps MPFR behind a
 * small value type and rebuilds the shared coefficient tables at
 * whatever precision an evaluation turns out to need.
 *
 * Internal to the library: not installed, included only by energy.cpp
 * and luminosity.cpp.
 */

#include <sunstruct/detail/ddouble.hpp>
#include <sunstruct/detail/series.hpp>
#include <sunstruct/energy.hpp>

#include <mpfr.h>

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace sunstruct::detail {

// Minimal RAII MPFR value.  New values allocate at the thread's current
// default precision (see PrecisionGuard); binary operators allocate at
// the wider of the two operands so mixed-precision arithmetic never
// truncates silently.
class mpreal {
  public:
    mpreal() {
        mpfr_init2(v_, default_prec());
        mpfr_set_zero(v_, 1);
    }
    explicit mpreal(double d) {
        mpfr_init2(v_, default_prec());
        mpfr_set_d(v_, d, MPFR_RNDN);
    }
    mpreal(double d, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, d, MPFR_RNDN);
    }
    mpreal(const mpreal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    mpreal(mpreal&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    mpreal& operator=(const mpreal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    mpreal& operator=(mpreal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~mpreal() { mpfr_clear(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    // log2 of magnitude; 0 for zero values.
    long exp2() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    static mpfr_prec_t& default_prec() {
        thread_local mpfr_prec_t p = 256;
        return p;
    }

  private:
    mpfr_t v_;
};

class PrecisionGuard {
  public:
    explicit PrecisionGuard(mpfr_prec_t p) : saved_(mpreal::default_prec()) {
        mpreal::default_prec() = p;
    }
    ~PrecisionGuard() { mpreal::default_prec() = saved_; }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    mpfr_prec_t saved_;
};

inline mpreal make_result(const mpreal& a, const mpreal& b) {
    mpreal r;
    if (mpfr_get_prec(r.raw()) < std::max(a.prec(), b.prec())) {
        mpfr_set_prec(r.raw(), std::max(a.prec(), b.prec()));
    }
    return r;
}

inline mpreal operator+(const mpreal& a, const mpreal& b) {
    mpreal r = make_result(a, b);
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline mpreal operator-(const mpreal& a, const mpreal& b) {
    mpreal r = make_result(a, b);
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline mpreal operator*(const mpreal& a, const mpreal& b) {
    mpreal r = make_result(a, b);
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline mpreal operator/(const mpreal& a, const mpreal& b) {
    mpreal r = make_result(a, b);
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline mpreal operator*(const mpreal& a, double b) {
    mpreal r = make_result(a, a);
    mpfr_mul_d(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
inline mpreal operator/(const mpreal& a, double b) {
    mpreal r = make_result(a, a);
    mpfr_div_d(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
inline mpreal abs(const mpreal& a) {
    mpreal r = make_result(a, a);
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline mpreal pow(const mpreal& base, const mpreal& e) {
    mpreal r = make_result(base, e);
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}

struct MpTable {
    mpfr_prec_t prec;
    std::vector<mpreal> coeff;  // order matches ExpansionBackend::terms
    std::vector<mpreal> mass;   // construction mass per coefficient
};

} // namespace sunstruct::detail

namespace sunstruct {

// Shared numeric core behind PowerTermExpansion and LuminosityTermSet.
// The double-double table drives the fast path; MPFR mirrors of the same
// coefficient construction are built lazily, one per precision actually
// requested, and cached for reuse across grid points and threads.
struct ExpansionBackend {
    struct DTerm {
        detail::ddouble coeff;
        double cmass;  // sum of |summand| folded into coeff at build time
        int zpow;      // merged z-exponent (series s plus h-power k)
        int q;
    };

    ModelParams params;
    int truncation_S = 0;
    std::vector<DTerm> terms;  // grouped by q, zpow dense ascending per group

    std::shared_ptr<const detail::MpTable> table_at(mpfr_prec_t prec) const;

  private:
    mutable std::mutex mp_mutex_;
    mutable std::map<mpfr_prec_t, std::shared_ptr<const detail::MpTable>> mp_tables_;
};

namespace detail {

std::shared_ptr<const ExpansionBackend> build_expansion_backend(
    const ModelParams& p, int S);

struct SeriesEvalDD {
    double value;
    double abs_mass;  // sum of |term|, the cancellation monitor
};

// eps/eps_c series at z = x^delta, double-double path.
SeriesEvalDD eval_series_dd(const ExpansionBackend& b, double x);

// Same sum in MPFR with automatic precision escalation.
double eval_series_mp(const ExpansionBackend& b, double x);

// Fast path with fallback: double-double unless the term-mass monitor
// says the result has fewer than ~9 safe decimal digits.
double eval_series_auto(const ExpansionBackend& b, double x);

// Luminosity term sum  sum_i coeff_i * int_0^z (1-v)^gamma v^(s*_i - 1) dv
// with s*_i = zpow_i + (3 + 2 q_i)/delta, dimensionless (caller applies
// the physical scale).
double eval_lum_profile_mp(const ExpansionBackend& b, double x);

// Same sum in double-double via a per-bucket downward beta recurrence,
// with the construction-mass monitor alongside.
SeriesEvalDD eval_lum_dd(const ExpansionBackend& b, double x);

// Fast path with fallback.  The term mass diverges as z -> 1 (the series
// converges only conditionally at the surface), so rows near the surface
// escalate to MPFR; the bulk of the radius stays double-double.
double eval_lum_profile_auto(const ExpansionBackend& b, double x);

// z = 1 case via complete beta factors: the independent closure path.
double eval_lum_total_mp(const ExpansionBackend& b);

} // namespace detail

} // namespace sunstruct
