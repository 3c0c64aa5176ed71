#ifndef EDSENSE_HOYT_HPP
#define EDSENSE_HOYT_HPP

#include <cstddef>
#include <random>
#include <vector>

namespace edsense {

/// Nakagami-q (Hoyt) fading: the SNR is gamma_bar * (X^2 + Y^2) with X, Y
/// zero-mean Gaussians whose standard deviations are in ratio q.
struct HoytFading {
    double q = 1.0;
    double gamma_bar = 1.0;

    /// Validates 0 < q <= 1 and gamma_bar > 0.
    static HoytFading make(double q, double gamma_bar);
    static HoytFading from_db(double q, double gamma_bar_db);

    double gamma_bar_db() const;
};

/// ((1+q^2)/(2 q gbar)) exp(-(1+q^2)^2 g / (4 q^2 gbar)) I0((1-q^4) g / (4 q^2 gbar)),
/// evaluated through the scaled Bessel function.
double snr_pdf(const HoytFading& f, double gamma);

/// Q1(alpha, beta) - Q1(beta, alpha) with
/// alpha^2 = (1+q^2)(1+q)^2 g / (4 q^2 gbar), beta^2 = (1+q^2)(1-q)^2 g / (4 q^2 gbar).
double snr_cdf(const HoytFading& f, double gamma);

/// E[exp(s gamma)] = (1 - 2 s gbar + (2 s gbar q / (1+q^2))^2)^{-1/2}.
/// Throws DomainError when the radicand is not positive.
double snr_mgf(const HoytFading& f, double s);

double sample_snr(const HoytFading& f, std::mt19937_64& rng);

std::vector<double> sample_snr(const HoytFading& f, std::mt19937_64& rng, std::size_t n);

}  // namespace edsense

#endif  // EDSENSE_HOYT_HPP
