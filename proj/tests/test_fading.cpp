#include <gtest/gtest.h>

#include <cmath>

#include "edsense/error.hpp"
#include "edsense/fading.hpp"
#include "reference_values.hpp"

using edsense::DetectorConfig;
using edsense::HoytFading;
namespace ref = edsense::reference;

TEST(AverageAuc, MatchesReferenceValues)
{
    EXPECT_NEAR(edsense::avg_auc_closed(DetectorConfig::make(5), HoytFading::make(0.5, 10)).value,
                ref::kAvgAuc_5_0_5_10, 1e-11);
    EXPECT_NEAR(edsense::avg_auc_closed(DetectorConfig::make(2.5), HoytFading::make(0.3, 3.16)).value,
                ref::kAvgAuc_2_5_0_3_3_16, 1e-11);
    EXPECT_NEAR(edsense::avg_auc_closed(DetectorConfig::make(1.5), HoytFading::make(0.1, 0.316)).value,
                ref::kAvgAuc_1_5_0_1_0_316, 1e-11);
    EXPECT_NEAR(edsense::avg_auc_closed(DetectorConfig::make(3), HoytFading::make(0.1, 100)).value,
                ref::kAvgAuc_3_0_1_100, 1e-11);
}

TEST(AverageAuc, RayleighRationalValue)
{
    // u = 2, q = 1, gbar = 1 gives 23/36.
    const auto v = edsense::avg_auc_closed(DetectorConfig::make(2), HoytFading::make(1.0, 1.0));
    EXPECT_NEAR(v.value, 23.0 / 36.0, 1e-14);
}

TEST(AverageAuc, UnitBandwidthMgfIdentity)
{
    const auto cfg = DetectorConfig::make(1);
    for (double q : {0.1, 0.5, 1.0}) {
        for (double db : {-5.0, 10.0, 30.0}) {
            const auto f = HoytFading::from_db(q, db);
            const double t = q * f.gamma_bar / (1 + q * q);
            const double expected = 1 - 0.5 / std::sqrt(1 + f.gamma_bar + t * t);
            EXPECT_NEAR(edsense::avg_auc_closed(cfg, f).value, expected, 1e-12);
        }
    }
}

TEST(AverageAuc, PathsAgree)
{
    for (double u : {1.0, 3.0, 1.5, 7.3}) {
        const auto cfg = DetectorConfig::make(u);
        for (double q : {0.1, 0.6}) {
            for (double db : {0.0, 15.0}) {
                const auto f = HoytFading::from_db(q, db);
                const double quad = edsense::avg_auc_quadrature(cfg, f).value;
                EXPECT_NEAR(edsense::avg_auc_series(cfg, f).value, quad, 1e-9);
                if (cfg.is_integer) EXPECT_NEAR(edsense::avg_auc_finite(cfg, f).value, quad, 1e-9);
            }
        }
    }
}

TEST(AverageAuc, ComplementAndDomain)
{
    const auto cfg = DetectorConfig::make(4);
    const auto f = HoytFading::make(0.4, 7.0);
    EXPECT_EQ(edsense::avg_cauc_closed(cfg, f).value, 1.0 - edsense::avg_auc_closed(cfg, f).value);
    EXPECT_THROW(edsense::avg_auc_finite(DetectorConfig::make(2.5), f), edsense::DomainError);
}

TEST(MixedPoissonWeights, SumToOne)
{
    for (double q : {0.05, 0.5, 1.0}) {
        const auto f = HoytFading::make(q, 3.0);
        double s = 0.0;
        for (int l = 0; l < 4000; ++l) s += edsense::mixed_poisson_weight(f, l);
        EXPECT_NEAR(s, 1.0, 1e-12) << q;
    }
    const auto f = HoytFading::make(1.0, 2.0);
    EXPECT_NEAR(edsense::mixed_poisson_weight(f, 3), std::pow(2.0, 3) / std::pow(3.0, 4), 1e-15);
}

TEST(AveragePd, ReducesToFalseAlarmAtLowSnr)
{
    const auto cfg = DetectorConfig::make(3);
    const auto f = HoytFading::make(0.5, 1e-9);
    EXPECT_NEAR(edsense::avg_pd_quadrature(cfg, f, 6.0).value, edsense::pf(cfg, 6.0), 1e-8);
}

TEST(AveragePd, BetweenFalseAlarmAndOne)
{
    const auto cfg = DetectorConfig::make(5);
    for (double db : {0.0, 10.0, 25.0}) {
        const double p = edsense::avg_pd_quadrature(cfg, HoytFading::from_db(0.2, db), 12.0).value;
        EXPECT_GT(p, edsense::pf(cfg, 12.0));
        EXPECT_LE(p, 1.0);
    }
}

TEST(PrintedVariants, UnitBandwidthDiffersOnlyByPrefactor)
{
    const auto cfg = DetectorConfig::make(1);
    const edsense::EvalPolicy policy;
    for (double q : {0.2, 0.7, 1.0}) {
        const auto f = HoytFading::make(q, 5.0);
        const double printed =
            edsense::avg_auc_paper_printed(cfg, f, policy, edsense::PrintedVariant::theorem1_printed).value;
        const double corrected = edsense::avg_auc_closed(cfg, f).value;
        EXPECT_NEAR((1 - printed) * (1 + q * q), 1 - corrected, 1e-13);
        const double shifted =
            edsense::avg_auc_paper_printed(cfg, f, policy, edsense::PrintedVariant::theorem1_shifted_binomial).value;
        EXPECT_NEAR(shifted, corrected, 1e-13);
    }
}

TEST(PrintedVariants, GammaBarExponentCoincidesAtUnitSnr)
{
    const auto cfg = DetectorConfig::make(2.5);
    const auto f = HoytFading::make(0.5, 1.0);
    const double printed =
        edsense::avg_auc_paper_printed(cfg, f, {}, edsense::PrintedVariant::theorem2_printed).value;
    EXPECT_NEAR(printed, edsense::avg_auc_series(cfg, f).value, 1e-9);
}
