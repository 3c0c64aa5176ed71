#ifndef EDSENSE_FADING_HPP
#define EDSENSE_FADING_HPP

///
/// \file fading.hpp
///
/// AUC and CAUC averaged over Hoyt fading.
///
/// For integer u the average follows from integrating the Laguerre form of
/// A(gamma) term by term against the Hoyt density,
///
///     Abar = 1 - sum_{l<u} sum_{i<=l} C(l+u-1, l-i) (1+q^2) q^{1+2i} 2^{i+1-l-u}
///                gbar^i / D1^{i+1} 2F1((i+1)/2, i/2+1; 1; ((1-q^4)/D1)^2),
///     D1 = 2 gbar q^2 + (1+q^2)^2.
///
/// For real u the Poisson-mixture form of A(gamma) averages to
///
///     Abar = sum_l w_l p_l,
///     p_l  = 2 (1+q^2) q^{2l+1} (4 gbar)^l / D^{l+1} 2F1((l+1)/2, l/2+1; 1; ((1-q^4)/D)^2),
///     D    = 4 gbar q^2 + (1+q^2)^2,
///
/// where p_l is the probability that a Poisson count with Hoyt-distributed
/// mean equals l, so that sum_l p_l = 1.
///

#include "edsense/detector.hpp"
#include "edsense/hoyt.hpp"
#include "edsense/policy.hpp"

namespace edsense {

/// Integer u dispatches to avg_auc_finite, other u to avg_auc_series.
MetricValue avg_auc_closed(const DetectorConfig& cfg, const HoytFading& f, const EvalPolicy& policy = {});

/// Exactly 1 - avg_auc_closed(...).value.
MetricValue avg_cauc_closed(const DetectorConfig& cfg, const HoytFading& f, const EvalPolicy& policy = {});

/// Finite double sum; requires integer u.
MetricValue avg_auc_finite(const DetectorConfig& cfg, const HoytFading& f);

/// Mixed-Poisson series with the same tail bracket as auc_awgn_series.
MetricValue avg_auc_series(const DetectorConfig& cfg, const HoytFading& f, const EvalPolicy& policy = {});

/// p_l above.
double mixed_poisson_weight(const HoytFading& f, int l);

/// int_0^inf A(gamma) p(gamma) dgamma by adaptive quadrature.
MetricValue avg_auc_quadrature(const DetectorConfig& cfg, const HoytFading& f, const EvalPolicy& policy = {});

/// int_0^inf Pd(gamma, lambda) p(gamma) dgamma by adaptive quadrature.
MetricValue avg_pd_quadrature(const DetectorConfig& cfg, const HoytFading& f, double lambda,
                              const EvalPolicy& policy = {});

/// Transcriptions of the closed forms kept for comparison only.
enum class PrintedVariant {
    theorem1_printed,           ///< finite sum without the (1+q^2) factor
    theorem1_shifted_binomial,  ///< finite sum with C(l+u, l-i) in place of C(l+u-1, l-i)
    theorem2_printed,           ///< series with gbar in place of gbar^l
};

MetricValue avg_auc_paper_printed(const DetectorConfig& cfg, const HoytFading& f, const EvalPolicy& policy,
                                  PrintedVariant variant);

}  // namespace edsense

#endif  // EDSENSE_FADING_HPP
