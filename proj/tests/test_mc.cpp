#include <gtest/gtest.h>

#include <cmath>

#include "edsense/detector.hpp"
#include "edsense/error.hpp"
#include "edsense/fading.hpp"
#include "edsense/mc.hpp"

using edsense::DetectorConfig;
using edsense::HoytFading;
using edsense::McConfig;

namespace {

McConfig small(std::uint64_t trials, unsigned workers = 1)
{
    McConfig mc;
    mc.trials = trials;
    mc.master_seed = 1234;
    mc.batch_size = 8192;
    mc.workers = workers;
    return mc;
}

}  // namespace

TEST(McConfig, Validation)
{
    McConfig mc;
    mc.trials = 0;
    EXPECT_THROW(mc.validate(), edsense::DomainError);
}

TEST(BatchEngine, DistinctPerBatchAndSeed)
{
    auto a = edsense::batch_engine(1, 0);
    auto b = edsense::batch_engine(1, 1);
    auto c = edsense::batch_engine(2, 0);
    auto a2 = edsense::batch_engine(1, 0);
    const auto va = a();
    EXPECT_NE(va, b());
    EXPECT_NE(va, c());
    EXPECT_EQ(va, a2());
}

TEST(SampleStatistic, Means)
{
    auto rng = edsense::batch_engine(5, 0);
    const auto cfg = DetectorConfig::make(2.5);
    const int n = 100'000;
    double s0 = 0.0;
    double s1 = 0.0;
    for (int i = 0; i < n; ++i) {
        s0 += edsense::sample_statistic(cfg, 0.0, edsense::Hypothesis::H0, rng);
        s1 += edsense::sample_statistic(cfg, 3.0, edsense::Hypothesis::H1, rng);
    }
    // Var = 4u under H0 and 4u + 8 gamma under H1.
    EXPECT_LT(std::fabs(s0 / n - 5.0), 4 * std::sqrt(10.0 / n));
    EXPECT_LT(std::fabs(s1 / n - 11.0), 4 * std::sqrt(34.0 / n));
}

TEST(EstimateAuc, ZeroSnrIsHalf)
{
    const auto e = edsense::estimate_auc(DetectorConfig::make(2), 0.0, small(100'000));
    EXPECT_EQ(e.trials, 100'000u);
    EXPECT_GT(e.std_error, 0.0);
    EXPECT_LT(std::fabs(e.value - 0.5), 4 * e.std_error);
}

TEST(EstimateAuc, FixedSnrUnitBandwidth)
{
    const auto e = edsense::estimate_auc(DetectorConfig::make(1), 2.0, small(200'000));
    EXPECT_LT(std::fabs(e.value - (1 - 0.5 * std::exp(-1.0))), 4 * e.std_error);
}

TEST(EstimateAuc, HoytAgreesWithClosedForm)
{
    const auto cfg = DetectorConfig::make(3);
    const auto f = HoytFading::from_db(0.4, 8.0);
    const auto e = edsense::estimate_auc(cfg, f, small(200'000));
    EXPECT_LT(std::fabs(e.value - edsense::avg_auc_closed(cfg, f).value), 4 * e.std_error);
}

TEST(EstimateAuc, IndependentOfWorkerCount)
{
    const auto cfg = DetectorConfig::make(1.5);
    const auto f = HoytFading::from_db(0.2, 3.0);
    const auto a = edsense::estimate_auc(cfg, f, small(50'000, 1));
    const auto b = edsense::estimate_auc(cfg, f, small(50'000, 4));
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.std_error, b.std_error);
}

TEST(EstimateExceedance, MatchesAnalyticProbabilities)
{
    const auto cfg = DetectorConfig::make(4);
    const auto e0 = edsense::estimate_exceedance(cfg, 0.0, edsense::Hypothesis::H0, 9.0, small(100'000));
    EXPECT_LT(std::fabs(e0.value - edsense::pf(cfg, 9.0)), 4 * e0.std_error);
    const auto e1 = edsense::estimate_exceedance(cfg, 2.5, edsense::Hypothesis::H1, 9.0, small(100'000));
    EXPECT_LT(std::fabs(e1.value - edsense::pd(cfg, 2.5, 9.0)), 4 * e1.std_error);
    const auto f = HoytFading::from_db(0.5, 5.0);
    const auto e2 = edsense::estimate_exceedance(cfg, f, 9.0, small(100'000));
    EXPECT_LT(std::fabs(e2.value - edsense::avg_pd_quadrature(cfg, f, 9.0).value), 4 * e2.std_error);
    EXPECT_THROW(edsense::estimate_exceedance(cfg, 0.0, edsense::Hypothesis::H0, -1.0, small(10)),
                 edsense::DomainError);
}
