#ifndef EDSENSE_DETECTOR_HPP
#define EDSENSE_DETECTOR_HPP

///
/// \file detector.hpp
///
/// Energy detector over an unfaded (AWGN) channel. With time-bandwidth
/// product u and instantaneous SNR gamma the decision statistic is central
/// chi-square with 2u degrees of freedom under H0 and noncentral chi-square
/// with noncentrality 2*gamma under H1, so that
///
///     Pf(lambda)        = Q(u, lambda/2)
///     Pd(gamma, lambda) = Q_u(sqrt(2 gamma), sqrt(lambda)).
///
/// The area under the ROC curve, A(gamma) = int Pd dPf, is provided in three
/// independent forms: a finite Laguerre sum for integer u, a Poisson mixture
/// of incomplete-beta weights for any real u, and direct quadrature.
///

#include <vector>

#include "edsense/policy.hpp"

namespace edsense {

struct DetectorConfig {
    double u = 1.0;
    bool is_integer = true;

    /// Validates u > 0 and sets is_integer when |u - round(u)| < 1e-12.
    static DetectorConfig make(double u);

    /// round(u); only meaningful when is_integer is set.
    int integer_u() const;
};

double pf(const DetectorConfig& cfg, double lambda);

double pd(const DetectorConfig& cfg, double gamma, double lambda);

/// Inverts pf by bracketed root finding; |pf(result) - pf_target| < 1e-10.
double threshold_for_pf(const DetectorConfig& cfg, double pf_target);

/// A(gamma). Integer u uses
///
///     A = 1 - e^{-gamma/2} sum_{l<u} L_l^{(u-1)}(-gamma/2) / 2^{l+u},
///
/// other u fall through to auc_awgn_series.
MetricValue auc_awgn(const DetectorConfig& cfg, double gamma, const EvalPolicy& policy = {});

/// A(gamma) = sum_l e^{-gamma} gamma^l / l! * w_l with w_l = I_{1/2}(u, u + l),
/// valid for every real u > 0. The Poisson tail beyond the last summed term
/// is closed with the bracket w_{N+1} <= w_l <= 1, which also supplies
/// est_error.
MetricValue auc_awgn_series(const DetectorConfig& cfg, double gamma, const EvalPolicy& policy = {});

/// Confluent hypergeometric form for integer u:
///
///     A = 1 - sum_{l<u} (gamma/2)^l e^{-gamma/2} / l!
///           + sum_{l=1-u}^{u-1} (u)_l e^{-gamma} 1F1~(u + l; 1 + l; gamma/2) / 2^{u+l}
///
/// where 1F1~ is the regularized function 1F1(a; b; x)/Gamma(b).
MetricValue auc_awgn_1f1_variant(const DetectorConfig& cfg, double gamma, const EvalPolicy& policy = {});

/// Exactly 1 - auc_awgn(cfg, gamma).value.
MetricValue cauc_awgn(const DetectorConfig& cfg, double gamma, const EvalPolicy& policy = {});

/// int_0^inf Pd(gamma, lambda) f0(lambda) dlambda with f0 the H0 density,
/// by adaptive Gauss-Kronrod quadrature on a mapped half line.
MetricValue auc_quadrature(const DetectorConfig& cfg, double gamma, const EvalPolicy& policy = {});

struct RocPoint {
    double pf = 0.0;
    double pd = 0.0;
};

/// n_points pairs on the uniform grid Pf = i/(n_points - 1); the two ends are
/// the exact limits (0, 0) and (1, 1).
std::vector<RocPoint> roc_points_awgn(const DetectorConfig& cfg, double gamma, int n_points);

/// Incomplete-beta weights w_l = I_{1/2}(u, u + l), built by the upward
/// recurrence w_{l+1} = w_l + Gamma(2u + l) / (Gamma(u) Gamma(u + l + 1) 2^{2u+l}).
/// Grows on demand; not thread safe.
class AucSeriesWeights {
public:
    explicit AucSeriesWeights(double u);

    double u() const { return u_; }

    /// w_l.
    double weight(int l);

    /// 1 - w_l without cancellation.
    double complement(int l);

    /// The same weight written as (l + u)_u 2F1(1, l + 2u; 1 + u; 1/2) / (u! 2^{l+2u}).
    double weight_2f1(int l) const;

private:
    void extend(int l);

    double u_;
    std::vector<long double> w_;
    std::vector<long double> c_;
    long double step_;
};

}  // namespace edsense

#endif  // EDSENSE_DETECTOR_HPP
