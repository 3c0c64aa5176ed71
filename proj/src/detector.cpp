#include "edsense/detector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "edsense/error.hpp"
#include "edsense/specfun.hpp"
#include "quadrature.hpp"

namespace edsense {

namespace {

void check_gamma(double gamma)
{
    if (!(gamma >= 0.0) || std::isinf(gamma)) throw DomainError("SNR must be finite and nonnegative");
}

void check_lambda(double lambda)
{
    if (!(lambda >= 0.0)) throw DomainError("threshold must be nonnegative");
}

constexpr double kEps = std::numeric_limits<double>::epsilon();

MetricValue auc_laguerre(int u, double gamma)
{
    // L_l^{(u-1)}(x) by the three-term recurrence in l, x = -gamma/2 <= 0,
    // so every term is nonnegative.
    const long double x = -0.5L * gamma;
    const long double alpha = u - 1;
    long double prev = 1;
    long double curr = 1 + alpha - x;
    long double sum = prev / std::ldexp(1.0L, u);
    for (int l = 1; l < u; ++l) {
        sum += curr / std::ldexp(1.0L, l + u);
        const long double next = ((2 * l + 1 + alpha - x) * curr - (l + alpha) * prev) / (l + 1);
        prev = curr;
        curr = next;
    }
    const long double tail = std::exp(x) * sum;
    return MetricValue{static_cast<double>(1 - tail), Method::closed_integer, u,
                       4 * kEps * (1 + static_cast<double>(tail))};
}

}  // namespace

DetectorConfig DetectorConfig::make(double u)
{
    if (!(u > 0.0) || std::isinf(u)) throw DomainError("time-bandwidth product u must be positive and finite");
    DetectorConfig cfg;
    cfg.u = u;
    cfg.is_integer = std::fabs(u - std::round(u)) < 1e-12;
    if (cfg.is_integer) cfg.u = std::round(u);
    return cfg;
}

int DetectorConfig::integer_u() const { return static_cast<int>(std::lround(u)); }

double pf(const DetectorConfig& cfg, double lambda)
{
    check_lambda(lambda);
    if (std::isinf(lambda)) return 0.0;
    return specfun::reg_upper_gamma(cfg.u, 0.5 * lambda);
}

double pd(const DetectorConfig& cfg, double gamma, double lambda)
{
    check_gamma(gamma);
    check_lambda(lambda);
    if (std::isinf(lambda)) return 0.0;
    return specfun::marcum_q(cfg.u, std::sqrt(2.0 * gamma), std::sqrt(lambda));
}

double threshold_for_pf(const DetectorConfig& cfg, double pf_target)
{
    if (!(pf_target > 0.0 && pf_target < 1.0)) throw DomainError("threshold_for_pf: target must lie in (0, 1)");
    auto residual = [&](double lambda) { return pf(cfg, lambda) - pf_target; };
    double hi = std::max(2.0 * cfg.u, 1.0);
    int doublings = 0;
    while (residual(hi) > 0.0) {
        hi *= 2.0;
        if (++doublings > 60) throw ConvergenceError("threshold_for_pf: could not bracket the threshold");
    }
    if (residual(hi) == 0.0) return hi;
    std::uintmax_t iterations = 200;
    const auto [lo_root, hi_root] = boost::math::tools::toms748_solve(
        residual, 0.0, hi, 1.0 - pf_target, residual(hi), boost::math::tools::eps_tolerance<double>(52), iterations);
    const double lambda = 0.5 * (lo_root + hi_root);
    if (std::fabs(residual(lambda)) >= 1e-10) {
        throw ConvergenceError("threshold_for_pf: root finder missed the 1e-10 target");
    }
    return lambda;
}

MetricValue auc_awgn(const DetectorConfig& cfg, double gamma, const EvalPolicy& policy)
{
    policy.validate();
    check_gamma(gamma);
    if (cfg.is_integer) return auc_laguerre(cfg.integer_u(), gamma);
    return auc_awgn_series(cfg, gamma, policy);
}

MetricValue auc_awgn_series(const DetectorConfig& cfg, double gamma, const EvalPolicy& policy)
{
    policy.validate();
    check_gamma(gamma);
    if (gamma == 0.0) return MetricValue{0.5, Method::closed_series, 1, 0.0};

    AucSeriesWeights weights(cfg.u);
    const long double log_gamma = std::log(static_cast<long double>(gamma));
    long double log_p = -static_cast<long double>(gamma);
    long double partial = 0;
    long double mass = 0;
    int settled = 0;
    for (int l = 0; l < policy.max_terms; ++l) {
        const long double p = std::exp(log_p);
        partial += p * weights.weight(l);
        mass += p;
        log_p += log_gamma - std::log(static_cast<long double>(l + 1));

        // The unsummed Poisson mass T multiplies weights in [w_{l+1}, 1].
        const long double tail = std::max<long double>(0, 1 - mass);
        const long double lo = partial + tail * weights.weight(l + 1);
        const long double half_width = 0.5L * tail * weights.complement(l + 1);
        const long double value = lo + half_width;
        if (half_width <= policy.rel_tol * value) {
            if (++settled >= 3) {
                const double err = static_cast<double>(half_width) + (l + 1) * kEps;
                return MetricValue{std::clamp(static_cast<double>(value), 0.5, 1.0), Method::closed_series, l + 1, err};
            }
        } else {
            settled = 0;
        }
    }
    throw ConvergenceError("auc_awgn_series: tolerance not met within max_terms");
}

MetricValue auc_awgn_1f1_variant(const DetectorConfig& cfg, double gamma, const EvalPolicy& policy)
{
    policy.validate();
    check_gamma(gamma);
    if (!cfg.is_integer) throw DomainError("auc_awgn_1f1_variant: requires integer u");
    const int u = cfg.integer_u();
    const double x = 0.5 * gamma;

    long double poisson = 0;
    long double term = std::exp(-static_cast<long double>(x));
    for (int l = 0; l < u; ++l) {
        poisson += term;
        term *= x / (l + 1);
    }

    // e^{-gamma} 1F1~(u+l; 1+l; x) = e^{-x} 1F1~(1-u; 1+l; -x); the right side
    // is a polynomial with nonnegative terms for every l >= 1-u.
    long double hyper = 0;
    for (int l = 1 - u; l <= u - 1; ++l) {
        const double reg = specfun::kummer_1f1_regularized(1.0 - u, 1.0 + l, -x);
        hyper += static_cast<long double>(specfun::pochhammer(u, l)) * reg / std::ldexp(1.0L, u + l);
    }
    hyper *= std::exp(-static_cast<long double>(x));

    const double value = static_cast<double>(1 - poisson + hyper);
    return MetricValue{value, Method::closed_integer, 3 * u - 1, 16 * kEps * u};
}

MetricValue cauc_awgn(const DetectorConfig& cfg, double gamma, const EvalPolicy& policy)
{
    MetricValue m = auc_awgn(cfg, gamma, policy);
    m.value = 1.0 - m.value;
    return m;
}

MetricValue auc_quadrature(const DetectorConfig& cfg, double gamma, const EvalPolicy& policy)
{
    policy.validate();
    check_gamma(gamma);
    const double u = cfg.u;
    const double log_gamma_u = specfun::ln_gamma(u);

    detail::QuadResult r;
    if (u > 1.0 && u < 2.0 && !cfg.is_integer) {
        // v = w^2 turns the v^{u-1} cusp into w^{2u-1}, which is at least C^1.
        auto integrand = [&](double w) {
            const double v = w * w;
            const double log_density = (2.0 * u - 1.0) * std::log(w) - v - log_gamma_u;
            const double density = 2.0 * std::exp(log_density);
            return density == 0.0 ? 0.0 : pd(cfg, gamma, 2.0 * v) * density;
        };
        const double scale = std::sqrt(u + gamma);
        r = detail::integrate_half_line(integrand, scale, {std::sqrt(u), scale, std::sqrt(u + 2.0 * gamma)},
                                        policy.rel_tol, policy.rel_tol * 1e-3, policy.quad_levels, "auc_quadrature");
    } else if (u >= 1.0) {
        // lambda = 2v; v^{u-1} e^{-v} / Gamma(u) is the H0 density in v.
        auto integrand = [&](double v) {
            const double log_density = (u == 1.0 ? 0.0 : (u - 1.0) * std::log(v)) - v - log_gamma_u;
            const double density = std::exp(log_density);
            return density == 0.0 ? 0.0 : pd(cfg, gamma, 2.0 * v) * density;
        };
        r = detail::integrate_half_line(integrand, u + gamma, {u, u + gamma, u + 2.0 * gamma}, policy.rel_tol,
                                        policy.rel_tol * 1e-3, policy.quad_levels, "auc_quadrature");
    } else {
        // v = w^{1/u} removes the integrable v^{u-1} singularity at the origin.
        const double log_gamma_u1 = specfun::ln_gamma(u + 1.0);
        auto integrand = [&](double w) {
            const double v = std::pow(w, 1.0 / u);
            const double density = std::exp(-v - log_gamma_u1);
            return density == 0.0 ? 0.0 : pd(cfg, gamma, 2.0 * v) * density;
        };
        const double scale = std::pow(u + gamma, u);
        r = detail::integrate_half_line(integrand, scale, {scale}, policy.rel_tol, policy.rel_tol * 1e-3,
                                        policy.quad_levels, "auc_quadrature");
    }
    return MetricValue{std::clamp(r.value, 0.0, 1.0), Method::quadrature, r.intervals, r.error};
}

std::vector<RocPoint> roc_points_awgn(const DetectorConfig& cfg, double gamma, int n_points)
{
    check_gamma(gamma);
    if (n_points < 2) throw DomainError("roc_points_awgn: need at least two points");
    std::vector<RocPoint> points;
    points.reserve(static_cast<std::size_t>(n_points));
    points.push_back({0.0, 0.0});
    for (int i = 1; i + 1 < n_points; ++i) {
        const double target = static_cast<double>(i) / (n_points - 1);
        const double lambda = threshold_for_pf(cfg, target);
        points.push_back({target, pd(cfg, gamma, lambda)});
    }
    points.push_back({1.0, 1.0});
    return points;
}

AucSeriesWeights::AucSeriesWeights(double u) : u_(u)
{
    if (!(u > 0.0)) throw DomainError("AucSeriesWeights: u must be positive");
    w_.push_back(0.5L);
    c_.push_back(0.5L);
    const long double log_step = specfun::ln_gamma(2.0 * u) - specfun::ln_gamma(u) - specfun::ln_gamma(u + 1.0) -
                                 2.0L * u * std::numbers::ln2_v<long double>;
    step_ = std::exp(log_step);
}

void AucSeriesWeights::extend(int l)
{
    while (static_cast<int>(w_.size()) <= l) {
        const int k = static_cast<int>(w_.size()) - 1;
        w_.push_back(std::min<long double>(1, w_.back() + step_));
        c_.push_back(std::max<long double>(0, c_.back() - step_));
        step_ *= (2.0L * u_ + k) / (2.0L * (u_ + k + 1));
    }
}

double AucSeriesWeights::weight(int l)
{
    if (l < 0) throw DomainError("AucSeriesWeights: negative index");
    extend(l);
    return static_cast<double>(w_[static_cast<std::size_t>(l)]);
}

double AucSeriesWeights::complement(int l)
{
    if (l < 0) throw DomainError("AucSeriesWeights: negative index");
    extend(l);
    return static_cast<double>(c_[static_cast<std::size_t>(l)]);
}

double AucSeriesWeights::weight_2f1(int l) const
{
    if (l < 0) throw DomainError("AucSeriesWeights: negative index");
    const double log_pref = specfun::ln_gamma(l + 2.0 * u_) - specfun::ln_gamma(l + u_) - specfun::ln_gamma(u_ + 1.0) -
                            (l + 2.0 * u_) * std::numbers::ln2;
    return std::exp(log_pref) * specfun::gauss_2f1(1.0, l + 2.0 * u_, 1.0 + u_, 0.5);
}

}  // namespace edsense
