#ifndef EDSENSE_MC_HPP
#define EDSENSE_MC_HPP

#include <cstdint>
#include <random>

#include "edsense/detector.hpp"
#include "edsense/hoyt.hpp"

namespace edsense {

struct McConfig {
    std::uint64_t trials = 1'000'000;
    std::uint64_t master_seed = 0;
    std::uint64_t batch_size = 65'536;
    unsigned workers = 0;  // 0 selects std::thread::hardware_concurrency()

    void validate() const;
};

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

enum class Hypothesis { H0, H1 };

/// Generator for one batch, seeded from (master_seed, batch).
std::mt19937_64 batch_engine(std::uint64_t master_seed, std::uint64_t batch);

/// One draw of the decision statistic: 2 Gamma(u) under H0,
/// 2 Gamma(u + K) with K ~ Poisson(gamma) under H1.
double sample_statistic(const DetectorConfig& cfg, double gamma, Hypothesis h, std::mt19937_64& rng);

/// Mann-Whitney estimate of Pr(Y1 > Y0) + Pr(Y1 = Y0)/2 at fixed SNR,
/// with a DeLong standard error.
McEstimate estimate_auc(const DetectorConfig& cfg, double gamma, const McConfig& mc);

/// As above with a fresh Hoyt SNR for every H1 draw.
McEstimate estimate_auc(const DetectorConfig& cfg, const HoytFading& f, const McConfig& mc);

/// Empirical Pr(Y > lambda) at fixed SNR.
McEstimate estimate_exceedance(const DetectorConfig& cfg, double gamma, Hypothesis h, double lambda,
                               const McConfig& mc);

/// Empirical Pr(Y1 > lambda) with a fresh Hoyt SNR per draw.
McEstimate estimate_exceedance(const DetectorConfig& cfg, const HoytFading& f, double lambda, const McConfig& mc);

}  // namespace edsense

#endif  // EDSENSE_MC_HPP
