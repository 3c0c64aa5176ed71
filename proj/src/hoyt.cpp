#include "edsense/hoyt.hpp"

#include <cmath>

#include "edsense/error.hpp"
#include "edsense/specfun.hpp"

namespace edsense {

namespace {

constexpr double kRayleighThreshold = 1e-6;

void check_gamma(double gamma)
{
    if (!(gamma >= 0.0)) throw DomainError("SNR must be nonnegative");
}

}  // namespace

HoytFading HoytFading::make(double q, double gamma_bar)
{
    if (!(q > 0.0 && q <= 1.0)) throw DomainError("Hoyt parameter q must lie in (0, 1]");
    if (!(gamma_bar > 0.0) || std::isinf(gamma_bar)) throw DomainError("average SNR must be positive and finite");
    return HoytFading{q, gamma_bar};
}

HoytFading HoytFading::from_db(double q, double gamma_bar_db)
{
    return make(q, std::pow(10.0, gamma_bar_db / 10.0));
}

double HoytFading::gamma_bar_db() const { return 10.0 * std::log10(gamma_bar); }

double snr_pdf(const HoytFading& f, double gamma)
{
    check_gamma(gamma);
    if (std::isinf(gamma)) return 0.0;
    const double q2 = f.q * f.q;
    if (f.q == 1.0) return std::exp(-gamma / f.gamma_bar) / f.gamma_bar;
    const double scale = (1.0 + q2) / (2.0 * f.q * f.gamma_bar);
    const double b = (1.0 - q2) * (1.0 + q2) / (4.0 * q2 * f.gamma_bar);
    // exp(-a g) I0(b g) = exp(-(a - b) g) * [exp(-b g) I0(b g)], a - b = (1+q^2)/(2 gbar)
    const double decay = (1.0 + q2) / (2.0 * f.gamma_bar);
    const double envelope = std::exp(-decay * gamma);
    if (envelope == 0.0) return 0.0;
    return scale * envelope * specfun::bessel_i_scaled(0.0, b * gamma);
}

double snr_cdf(const HoytFading& f, double gamma)
{
    check_gamma(gamma);
    if (gamma == 0.0) return 0.0;
    if (std::isinf(gamma)) return 1.0;
    if (1.0 - f.q < kRayleighThreshold) return -std::expm1(-gamma / f.gamma_bar);
    const double q2 = f.q * f.q;
    const double base = (1.0 + q2) * gamma / (4.0 * q2 * f.gamma_bar);
    const double alpha = (1.0 + f.q) * std::sqrt(base);
    const double beta = (1.0 - f.q) * std::sqrt(base);
    const double cdf = specfun::marcum_q(1.0, alpha, beta) - specfun::marcum_q(1.0, beta, alpha);
    return std::fmin(1.0, std::fmax(0.0, cdf));
}

double snr_mgf(const HoytFading& f, double s)
{
    if (std::isnan(s)) throw DomainError("snr_mgf: NaN argument");
    const double q2 = f.q * f.q;
    const double k = q2 / ((1.0 + q2) * (1.0 + q2));
    // The radicand 1 - t + k t^2 (t = 2 s gbar) first vanishes at this t.
    const double t_max = 2.0 / (1.0 + std::sqrt(1.0 - 4.0 * k));
    const double t = 2.0 * s * f.gamma_bar;
    const double c = t * f.q / (1.0 + q2);
    const double radicand = 1.0 - t + c * c;
    if (!(t < t_max) || !(radicand > 0.0)) throw DomainError("snr_mgf: argument outside the region of convergence");
    return 1.0 / std::sqrt(radicand);
}

double sample_snr(const HoytFading& f, std::mt19937_64& rng)
{
    const double q2 = f.q * f.q;
    std::normal_distribution<double> in_phase(0.0, std::sqrt(1.0 / (1.0 + q2)));
    std::normal_distribution<double> quadrature(0.0, std::sqrt(q2 / (1.0 + q2)));
    const double x = in_phase(rng);
    const double y = quadrature(rng);
    return f.gamma_bar * (x * x + y * y);
}

std::vector<double> sample_snr(const HoytFading& f, std::mt19937_64& rng, std::size_t n)
{
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_snr(f, rng));
    return out;
}

}  // namespace edsense
