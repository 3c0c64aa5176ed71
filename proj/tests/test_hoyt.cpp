#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "edsense/error.hpp"
#include "edsense/hoyt.hpp"
#include "reference_values.hpp"

using edsense::HoytFading;
namespace ref = edsense::reference;

TEST(HoytFading, Validation)
{
    EXPECT_THROW(HoytFading::make(0.0, 1.0), edsense::DomainError);
    EXPECT_THROW(HoytFading::make(1.2, 1.0), edsense::DomainError);
    EXPECT_THROW(HoytFading::make(0.5, 0.0), edsense::DomainError);
    const auto f = HoytFading::from_db(0.5, 10.0);
    EXPECT_NEAR(f.gamma_bar, 10.0, 1e-13);
    EXPECT_NEAR(f.gamma_bar_db(), 10.0, 1e-13);
}

TEST(HoytCdf, MatchesReferenceValues)
{
    EXPECT_NEAR(edsense::snr_cdf(HoytFading::make(0.5, 1), 1.0), ref::kHoytCdf_0_5_1_1, 1e-13);
    EXPECT_NEAR(edsense::snr_cdf(HoytFading::make(0.1, 2), 0.2), ref::kHoytCdf_0_1_2_0_2, 1e-13);
    EXPECT_NEAR(edsense::snr_cdf(HoytFading::make(0.9, 2), 3.0), ref::kHoytCdf_0_9_2_3, 1e-13);
}

TEST(HoytCdf, LimitsAndMonotone)
{
    for (double q : {0.05, 0.4, 0.999999, 1.0}) {
        const auto f = HoytFading::make(q, 2.0);
        EXPECT_EQ(edsense::snr_cdf(f, 0.0), 0.0);
        double prev = 0.0;
        for (double g = 0.05; g < 80; g *= 1.5) {
            const double c = edsense::snr_cdf(f, g);
            EXPECT_GE(c, prev);
            EXPECT_LE(c, 1.0);
            prev = c;
        }
        EXPECT_NEAR(prev, 1.0, 1e-6);
    }
}

TEST(HoytCdf, ContinuousNearUnitQ)
{
    const auto a = HoytFading::make(1.0 - 2e-6, 3.0);
    const auto b = HoytFading::make(1.0 - 5e-7, 3.0);
    for (double g : {0.5, 3.0, 9.0}) EXPECT_NEAR(edsense::snr_cdf(a, g), edsense::snr_cdf(b, g), 1e-8);
}

TEST(HoytPdf, ExponentialAtUnitQ)
{
    const auto f = HoytFading::make(1.0, 4.0);
    for (double g : {0.0, 1.0, 10.0}) EXPECT_NEAR(edsense::snr_pdf(f, g), std::exp(-g / 4) / 4, 1e-15);
}

TEST(HoytPdf, FiniteAtLargeArguments)
{
    const auto f = HoytFading::make(0.05, 1.0);
    EXPECT_TRUE(std::isfinite(edsense::snr_pdf(f, 500.0)));
    EXPECT_GT(edsense::snr_pdf(f, 0.0), 0.0);
    EXPECT_THROW(edsense::snr_pdf(f, -1.0), edsense::DomainError);
}

TEST(HoytMgf, ValuesAndDomain)
{
    const auto f = HoytFading::make(0.5, 2.0);
    EXPECT_EQ(edsense::snr_mgf(f, 0.0), 1.0);
    const double t = 0.5 * 2.0 * 2 / (1 + 0.25);
    EXPECT_NEAR(edsense::snr_mgf(f, -1.0), 1.0 / std::sqrt(1 + 2 * 2.0 + t * t), 1e-15);
    EXPECT_THROW(edsense::snr_mgf(f, 10.0), edsense::DomainError);
}

TEST(HoytSampling, MeanMatchesAverageSnr)
{
    std::mt19937_64 rng(7);
    const auto f = HoytFading::make(0.3, 5.0);
    const auto draws = edsense::sample_snr(f, rng, 200'000);
    double s = 0.0;
    double s2 = 0.0;
    for (double g : draws) {
        EXPECT_GE(g, 0.0);
        s += g;
        s2 += g * g;
    }
    const double n = static_cast<double>(draws.size());
    const double mean = s / n;
    const double se = std::sqrt((s2 / n - mean * mean) / n);
    EXPECT_LT(std::fabs(mean - 5.0), 4 * se);
}

TEST(HoytSampling, ReproducibleForSeed)
{
    std::mt19937_64 a(11);
    std::mt19937_64 b(11);
    const auto f = HoytFading::make(0.7, 1.0);
    EXPECT_EQ(edsense::sample_snr(f, a, 100), edsense::sample_snr(f, b, 100));
}
