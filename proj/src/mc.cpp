#include "edsense/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "edsense/error.hpp"

namespace edsense {

namespace {

struct BatchResult {
    double value = 0.0;
    double variance = 0.0;  // variance of the batch estimate
    std::uint64_t n = 0;
};

unsigned worker_count(const McConfig& mc, std::uint64_t batches)
{
    unsigned w = mc.workers == 0 ? std::thread::hardware_concurrency() : mc.workers;
    if (w == 0) w = 1;
    return static_cast<unsigned>(std::min<std::uint64_t>(w, batches));
}

// Runs body(batch) for every batch on a small pool; results land in batch
// order so the reduction never depends on scheduling.
std::vector<BatchResult> run_batches(const McConfig& mc, const std::function<BatchResult(std::uint64_t)>& body)
{
    const std::uint64_t batches = (mc.trials + mc.batch_size - 1) / mc.batch_size;
    std::vector<BatchResult> results(batches);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::uint64_t b = next++; b < batches; b = next++) {
            try {
                results[b] = body(b);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned workers = worker_count(mc, batches);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

std::uint64_t batch_trials(const McConfig& mc, std::uint64_t batch)
{
    const std::uint64_t start = batch * mc.batch_size;
    return std::min(mc.batch_size, mc.trials - start);
}

McEstimate combine(const std::vector<BatchResult>& results)
{
    double weighted = 0.0;
    double variance = 0.0;
    std::uint64_t total = 0;
    for (const auto& r : results) total += r.n;
    for (const auto& r : results) {
        const double w = static_cast<double>(r.n) / static_cast<double>(total);
        weighted += w * r.value;
        variance += w * w * r.variance;
    }
    return McEstimate{std::clamp(weighted, 0.0, 1.0), std::sqrt(variance), total};
}

// Mann-Whitney statistic over one batch with DeLong placement variances.
BatchResult rank_auc(std::vector<double>& h0, const std::vector<double>& h1)
{
    std::sort(h0.begin(), h0.end());
    const double n0 = static_cast<double>(h0.size());
    const double n1 = static_cast<double>(h1.size());

    std::vector<double> v10(h1.size());
    for (std::size_t i = 0; i < h1.size(); ++i) {
        const auto lo = std::lower_bound(h0.begin(), h0.end(), h1[i]);
        const auto hi = std::upper_bound(lo, h0.end(), h1[i]);
        v10[i] = (static_cast<double>(lo - h0.begin()) + 0.5 * static_cast<double>(hi - lo)) / n0;
    }

    std::vector<double> sorted_h1(h1);
    std::sort(sorted_h1.begin(), sorted_h1.end());
    std::vector<double> v01(h0.size());
    for (std::size_t j = 0; j < h0.size(); ++j) {
        const auto lo = std::lower_bound(sorted_h1.begin(), sorted_h1.end(), h0[j]);
        const auto hi = std::upper_bound(lo, sorted_h1.end(), h0[j]);
        const double above = static_cast<double>(sorted_h1.end() - hi);
        v01[j] = (above + 0.5 * static_cast<double>(hi - lo)) / n1;
    }

    auto mean_var = [](const std::vector<double>& v, double& mean, double& var) {
        double m = 0.0;
        for (double x : v) m += x;
        m /= static_cast<double>(v.size());
        double s = 0.0;
        for (double x : v) s += (x - m) * (x - m);
        mean = m;
        var = v.size() > 1 ? s / static_cast<double>(v.size() - 1) : 0.0;
    };
    double auc = 0.0;
    double var10 = 0.0;
    double mean01 = 0.0;
    double var01 = 0.0;
    mean_var(v10, auc, var10);
    mean_var(v01, mean01, var01);
    return BatchResult{auc, var10 / n1 + var01 / n0, h1.size()};
}

BatchResult proportion(std::uint64_t hits, std::uint64_t n)
{
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return BatchResult{p, p * (1.0 - p) / static_cast<double>(n), n};
}

template <class DrawH1>
McEstimate auc_with(const DetectorConfig& cfg, const McConfig& mc, DrawH1 draw_h1)
{
    mc.validate();
    auto body = [&](std::uint64_t batch) {
        std::mt19937_64 rng = batch_engine(mc.master_seed, batch);
        const std::uint64_t n = batch_trials(mc, batch);
        std::vector<double> h0(n);
        std::vector<double> h1(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            h0[i] = sample_statistic(cfg, 0.0, Hypothesis::H0, rng);
            h1[i] = draw_h1(rng);
        }
        return rank_auc(h0, h1);
    };
    return combine(run_batches(mc, body));
}

template <class Draw>
McEstimate exceedance_with(const McConfig& mc, double lambda, Draw draw)
{
    mc.validate();
    if (!(lambda >= 0.0)) throw DomainError("threshold must be nonnegative");
    auto body = [&](std::uint64_t batch) {
        std::mt19937_64 rng = batch_engine(mc.master_seed, batch);
        const std::uint64_t n = batch_trials(mc, batch);
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            if (draw(rng) > lambda) ++hits;
        }
        return proportion(hits, n);
    };
    return combine(run_batches(mc, body));
}

}  // namespace

void McConfig::validate() const
{
    if (trials == 0) throw DomainError("McConfig: trials must be positive");
    if (batch_size < 2) throw DomainError("McConfig: batch_size must be at least 2");
}

std::mt19937_64 batch_engine(std::uint64_t master_seed, std::uint64_t batch)
{
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32)};
    return std::mt19937_64(seq);
}

double sample_statistic(const DetectorConfig& cfg, double gamma, Hypothesis h, std::mt19937_64& rng)
{
    if (!(gamma >= 0.0)) throw DomainError("SNR must be nonnegative");
    double shape = cfg.u;
    if (h == Hypothesis::H1 && gamma > 0.0) {
        std::poisson_distribution<long long> extra(gamma);
        shape += static_cast<double>(extra(rng));
    }
    std::gamma_distribution<double> g(shape, 1.0);
    return 2.0 * g(rng);
}

McEstimate estimate_auc(const DetectorConfig& cfg, double gamma, const McConfig& mc)
{
    return auc_with(cfg, mc, [&](std::mt19937_64& rng) { return sample_statistic(cfg, gamma, Hypothesis::H1, rng); });
}

McEstimate estimate_auc(const DetectorConfig& cfg, const HoytFading& f, const McConfig& mc)
{
    return auc_with(cfg, mc, [&](std::mt19937_64& rng) {
        const double gamma = sample_snr(f, rng);
        return sample_statistic(cfg, gamma, Hypothesis::H1, rng);
    });
}

McEstimate estimate_exceedance(const DetectorConfig& cfg, double gamma, Hypothesis h, double lambda,
                               const McConfig& mc)
{
    return exceedance_with(mc, lambda, [&](std::mt19937_64& rng) { return sample_statistic(cfg, gamma, h, rng); });
}

McEstimate estimate_exceedance(const DetectorConfig& cfg, const HoytFading& f, double lambda, const McConfig& mc)
{
    return exceedance_with(mc, lambda, [&](std::mt19937_64& rng) {
        const double gamma = sample_snr(f, rng);
        return sample_statistic(cfg, gamma, Hypothesis::H1, rng);
    });
}

}  // namespace edsense
