#include "edsense/fading.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "edsense/error.hpp"
#include "edsense/specfun.hpp"
#include "quadrature.hpp"

namespace edsense {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 2F1((i+1)/2, i/2+1; 1; z) for the Bessel-Laplace integrals.
double bessel_laplace_2f1(int i, double z)
{
    return specfun::gauss_2f1(0.5 * (i + 1), 0.5 * i + 1.0, 1.0, z);
}

// 1 - Abar as the finite double sum. `binomial_offset` selects C(l+u-1+offset, l-i).
long double finite_sum(int u, const HoytFading& f, int binomial_offset, bool with_prefactor)
{
    const long double q = f.q;
    const long double q2 = q * q;
    const long double s = 1 + q2;
    const long double d1 = 2 * f.gamma_bar * q2 + s * s;
    const double z1 = static_cast<double>(((1 - q2) * s / d1) * ((1 - q2) * s / d1));

    std::vector<long double> inner(static_cast<std::size_t>(u));
    long double power = 1;  // (2 q^2 gbar / d1)^i
    const long double ratio = 2 * q2 * f.gamma_bar / d1;
    for (int i = 0; i < u; ++i) {
        // q^{1+2i} 2^{i+1} gbar^i / d1^{i+1} = 2 q (2 q^2 gbar / d1)^i / d1
        inner[static_cast<std::size_t>(i)] = 2 * q * power / d1 * bessel_laplace_2f1(i, z1);
        power *= ratio;
    }

    long double sum = 0;
    for (int l = 0; l < u; ++l) {
        const long double scale = std::ldexp(1.0L, -(l + u));
        for (int i = 0; i <= l; ++i) {
            const double c = specfun::binomial(l + u - 1 + binomial_offset, l - i);
            sum += c * scale * inner[static_cast<std::size_t>(i)];
        }
    }
    return with_prefactor ? s * sum : sum;
}

// Sum of w_l * p_l with the tail bracket; `gamma_bar_power` false replaces
// gbar^l by gbar, in which case the p_l no longer sum to one and the series
// is summed plainly.
MetricValue mixed_series(const DetectorConfig& cfg, const HoytFading& f, const EvalPolicy& policy,
                         bool gamma_bar_power)
{
    AucSeriesWeights weights(cfg.u);
    long double partial = 0;
    long double mass = 0;
    int settled = 0;
    const long double log_gbar = std::log(static_cast<long double>(f.gamma_bar));
    for (int l = 0; l < policy.max_terms; ++l) {
        long double p = mixed_poisson_weight(f, l);
        if (!gamma_bar_power) p *= std::exp((1 - l) * log_gbar);
        partial += p * weights.weight(l);
        mass += p;
        if (gamma_bar_power) {
            const long double tail = std::max<long double>(0, 1 - mass);
            const long double lo = partial + tail * weights.weight(l + 1);
            const long double half_width = 0.5L * tail * weights.complement(l + 1);
            const long double value = lo + half_width;
            if (half_width <= policy.rel_tol * value) {
                if (++settled >= 3) {
                    const double err = static_cast<double>(half_width) + 4 * (l + 1) * kEps;
                    return MetricValue{std::clamp(static_cast<double>(value), 0.5, 1.0), Method::closed_series, l + 1,
                                       err};
                }
            } else {
                settled = 0;
            }
        } else {
            const long double term = p * weights.weight(l);
            if (l > 0 && term <= policy.rel_tol * std::fabs(partial)) {
                if (++settled >= 3) {
                    return MetricValue{static_cast<double>(partial), Method::closed_series, l + 1,
                                       static_cast<double>(term)};
                }
            } else {
                settled = 0;
            }
        }
    }
    throw ConvergenceError("average AUC series: tolerance not met within max_terms");
}

double quadrature_abs_tol(const EvalPolicy& policy) { return policy.rel_tol * 1e-2; }

std::vector<double> hoyt_breaks(const HoytFading& f)
{
    const double q2 = f.q * f.q;
    return {0.25 * q2 * f.gamma_bar, q2 * f.gamma_bar, f.gamma_bar, 4.0 * f.gamma_bar};
}

}  // namespace

MetricValue avg_auc_closed(const DetectorConfig& cfg, const HoytFading& f, const EvalPolicy& policy)
{
    policy.validate();
    if (cfg.is_integer) return avg_auc_finite(cfg, f);
    return avg_auc_series(cfg, f, policy);
}

MetricValue avg_cauc_closed(const DetectorConfig& cfg, const HoytFading& f, const EvalPolicy& policy)
{
    MetricValue m = avg_auc_closed(cfg, f, policy);
    m.value = 1.0 - m.value;
    return m;
}

MetricValue avg_auc_finite(const DetectorConfig& cfg, const HoytFading& f)
{
    if (!cfg.is_integer) throw DomainError("avg_auc_finite: requires integer u");
    const int u = cfg.integer_u();
    const long double complement = finite_sum(u, f, 0, true);
    const double value = std::clamp(static_cast<double>(1 - complement), 0.5, 1.0);
    return MetricValue{value, Method::closed_integer, u * (u + 1) / 2, 8 * kEps * u * u};
}

MetricValue avg_auc_series(const DetectorConfig& cfg, const HoytFading& f, const EvalPolicy& policy)
{
    policy.validate();
    return mixed_series(cfg, f, policy, true);
}

namespace {

// log 2F1((l+1)/2, l/2+1; 1; z) through Euler's transformation
// (1-z)^{-l-1/2} 2F1((1-l)/2, -l/2; 1; z); the second factor terminates and
// all of its terms are nonnegative, so it is summed with periodic rescaling.
long double log_bessel_laplace_2f1(int l, long double z)
{
    const long double a = 0.5L * (1 - l);
    const long double b = -0.5L * l;
    long double term = 1;
    long double sum = 1;
    long double log_scale = 0;
    for (int k = 0;; ++k) {
        const long double num = (a + k) * (b + k);
        if (num == 0) break;
        term *= num * z / ((k + 1.0L) * (k + 1.0L));
        sum += term;
        if (sum > 1e300L) {
            sum *= 1e-300L;
            term *= 1e-300L;
            log_scale += 300 * std::log(10.0L);
        }
    }
    return std::log(sum) + log_scale - (l + 0.5L) * std::log1p(-z);
}

}  // namespace

double mixed_poisson_weight(const HoytFading& f, int l)
{
    if (l < 0) throw DomainError("mixed_poisson_weight: negative index");
    const long double q = f.q;
    const long double q2 = q * q;
    const long double s = 1 + q2;
    const long double d = 4 * f.gamma_bar * q2 + s * s;
    const long double x = (1 - q2) * s / d;
    const long double log_p = std::log(2 * s * q) + l * std::log(4 * q2 * f.gamma_bar / d) - std::log(d);
    return static_cast<double>(std::exp(log_p + log_bessel_laplace_2f1(l, x * x)));
}

MetricValue avg_auc_quadrature(const DetectorConfig& cfg, const HoytFading& f, const EvalPolicy& policy)
{
    policy.validate();
    auto integrand = [&](double gamma) {
        const double density = snr_pdf(f, gamma);
        return density == 0.0 ? 0.0 : auc_awgn(cfg, gamma, policy).value * density;
    };
    const detail::QuadResult r = detail::integrate_half_line(integrand, f.gamma_bar, hoyt_breaks(f), policy.rel_tol,
                                                             quadrature_abs_tol(policy), policy.quad_levels,
                                                             "avg_auc_quadrature");
    return MetricValue{std::clamp(r.value, 0.0, 1.0), Method::quadrature, r.intervals, r.error};
}

MetricValue avg_pd_quadrature(const DetectorConfig& cfg, const HoytFading& f, double lambda,
                              const EvalPolicy& policy)
{
    policy.validate();
    if (!(lambda >= 0.0)) throw DomainError("threshold must be nonnegative");
    if (lambda == 0.0) return MetricValue{1.0, Method::quadrature, 0, 0.0};
    auto integrand = [&](double gamma) {
        const double density = snr_pdf(f, gamma);
        return density == 0.0 ? 0.0 : pd(cfg, gamma, lambda) * density;
    };
    std::vector<double> breaks = hoyt_breaks(f);
    breaks.push_back(0.5 * lambda);
    const detail::QuadResult r = detail::integrate_half_line(integrand, f.gamma_bar, breaks, policy.rel_tol,
                                                             quadrature_abs_tol(policy), policy.quad_levels,
                                                             "avg_pd_quadrature");
    return MetricValue{std::clamp(r.value, 0.0, 1.0), Method::quadrature, r.intervals, r.error};
}

MetricValue avg_auc_paper_printed(const DetectorConfig& cfg, const HoytFading& f, const EvalPolicy& policy,
                                  PrintedVariant variant)
{
    policy.validate();
    switch (variant) {
    case PrintedVariant::theorem1_printed:
    case PrintedVariant::theorem1_shifted_binomial: {
        if (!cfg.is_integer) throw DomainError("finite-sum variants require integer u");
        const bool printed = variant == PrintedVariant::theorem1_printed;
        const int u = cfg.integer_u();
        const long double complement = finite_sum(u, f, printed ? 0 : 1, !printed);
        return MetricValue{static_cast<double>(1 - complement), Method::closed_integer, u * (u + 1) / 2, 0.0};
    }
    case PrintedVariant::theorem2_printed:
        return mixed_series(cfg, f, policy, false);
    }
    throw DomainError("unknown printed variant");
}

}  // namespace edsense
