#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "../quadrature.hpp"
#include "edsense/fading.hpp"
#include "edsense/hoyt.hpp"
#include "edsense/mc.hpp"
#include "edsense/specfun.hpp"
#include "internal.hpp"

namespace edsense::cli {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

// Tracks the worst deviation seen over a grid.
struct Worst {
    double dev = 0.0;
    std::string where;
    bool ok = true;

    void add(double d, double tol, const std::string& at)
    {
        if (!(d <= tol)) ok = false;
        if (std::isnan(d) || d > dev) {
            dev = d;
            where = at;
        }
    }
    std::string detail() const { return fmt("max dev %.3g", dev) + (where.empty() ? "" : " at " + where); }
};

const std::vector<double> kSnrDb = {-5, 0, 5, 10, 15, 20, 25, 30};
const std::vector<double> kQ = {0.1, 0.3, 0.5, 0.75, 1.0};

double rayleigh_average(double u, double gbar)
{
    AucSeriesWeights w(u);
    const double r = gbar / (1.0 + gbar);
    double p = 1.0 / (1.0 + gbar);
    double sum = 0.0;
    double mass = 0.0;
    for (int l = 0; l < 2'000'000; ++l) {
        sum += p * w.weight(l);
        mass += p;
        p *= r;
        if (1.0 - mass < 1e-15) break;
    }
    return sum + (1.0 - mass);  // leftover mass carries weight close to 1
}

double integrate_finite(const std::function<double(double)>& f, double a, double b)
{
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 12, 1e-11, &err);
}

double hoyt_moment(const HoytFading& f, const std::function<double(double)>& g)
{
    const double gb = f.gamma_bar;
    const double q2 = f.q * f.q;
    return detail::integrate_half_line([&](double x) { return g(x) * snr_pdf(f, x); }, gb,
                                       {q2 * gb / 4.0, q2 * gb, gb, 4.0 * gb}, 1e-12, 1e-15, 50, "hoyt moment")
        .value;
}

void suite_specfun(Checker& c)
{
    using namespace specfun;
    c.section("specfun");

    {
        bool ok = true;
        for (double a : {0.5, 1.0, 2.5, 5.0, 10.0, 40.0}) {
            if (reg_upper_gamma(a, 0.0) != 1.0) ok = false;
            if (!(reg_upper_gamma(a, 1e4) < 1e-300)) ok = false;
            double prev = 1.0;
            for (double x = 0.0; x <= 100.0; x += 0.25) {
                const double v = reg_upper_gamma(a, x);
                if (v > prev || v < 0.0) ok = false;
                prev = v;
            }
        }
        c.check(ok, "reg_upper_gamma monotone with limits 1 and 0", "");
    }
    {
        Worst w;
        for (int m = 1; m <= 6; ++m) {
            for (auto [a, b] : std::vector<std::pair<double, double>>{{0.5, 1}, {1, 2}, {3, 2}, {5, 6}, {2, 9}}) {
                const double lhs = marcum_q(m + 1, a, b) - marcum_q(m, a, b);
                const double rhs = std::pow(b / a, m) * std::exp(-0.5 * (a - b) * (a - b)) * bessel_i_scaled(m, a * b);
                w.add(std::fabs(lhs - rhs) / std::fabs(rhs), 1e-10, fmt("m=%g a=%g b=%g", m, a, b));
            }
        }
        c.check(w.ok, "Marcum Q recurrence in m (rel 1e-10)", w.detail());
    }
    {
        Worst w;
        for (double u : {0.5, 1.0, 2.5, 5.0, 7.3}) {
            for (double lam : {0.1, 1.0, 5.0, 10.0, 30.0}) {
                w.add(std::fabs(marcum_q(u, 0.0, std::sqrt(lam)) - reg_upper_gamma(u, lam / 2)), 1e-12,
                      fmt("u=%g lambda=%g", u, lam));
            }
        }
        c.check(w.ok, "marcum_q(u, 0, b) = Q(u, b^2/2) (1e-12)", w.detail());
    }
    {
        Worst w;
        for (double z : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99}) {
            w.add(std::fabs(gauss_2f1(0.5, 1.0, 1.0, z) * std::sqrt(1.0 - z) - 1.0), 1e-12, fmt("z=%g", z));
        }
        c.check(w.ok, "2F1(1/2, 1; 1; z) sqrt(1 - z) = 1 (1e-12)", w.detail());
    }
    {
        Worst w;
        for (double a : {0.5, 1.0, 2.7}) {
            for (double x = -20.0; x <= 20.0; x += 2.5) {
                w.add(std::fabs(kummer_1f1(a, a, x) / std::exp(x) - 1.0), 1e-12, fmt("a=%g x=%g", a, x));
            }
        }
        c.check(w.ok, "1F1(a; a; x) = e^x (rel 1e-12)", w.detail());
    }
    {
        Worst w;
        for (int n = 0; n <= 12; ++n) {
            for (double alpha : {0.0, 1.0, 5.0, 2.5}) {
                for (double x : {-10.0, -5.0, -1.0, 0.0, 0.5, 2.0, 5.0, 10.0}) {
                    long double sum = 0.0L;
                    long double scale = 1.0L;
                    for (int k = 0; k <= n; ++k) {
                        long double term = binomial(n + alpha, n - k) * std::pow(-(long double)x, k);
                        for (int j = 2; j <= k; ++j) term /= j;
                        sum += term;
                        scale = std::max(scale, std::fabs(term));
                    }
                    const double d = std::fabs(laguerre(n, alpha, x) - static_cast<double>(sum));
                    w.add(d / static_cast<double>(scale), 1e-10, fmt("n=%g alpha=%g x=%g", n, alpha, x));
                }
            }
        }
        c.check(w.ok, "Laguerre recurrence equals explicit sum (1e-10)", w.detail());
    }
}

void suite_detector(Checker& c)
{
    c.section("detector");
    {
        Worst w;
        const auto cfg = DetectorConfig::make(1.0);
        for (double g : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0}) {
            w.add(std::fabs(auc_awgn(cfg, g).value - (1.0 - 0.5 * std::exp(-g / 2))), 1e-12, fmt("gamma=%g", g));
        }
        c.check(w.ok, "u=1 AUC identity (1e-12)", w.detail());
    }
    const std::vector<double> us = {1, 2, 5, 2.5, 7.3};
    {
        Worst w;
        for (double u : us) w.add(std::fabs(auc_awgn(DetectorConfig::make(u), 0.0).value - 0.5), 1e-12, fmt("u=%g", u));
        c.check(w.ok, "AUC at zero SNR is 1/2 (1e-12)", w.detail());
    }
    {
        bool mono = true;
        bool comp = true;
        for (double u : us) {
            const auto cfg = DetectorConfig::make(u);
            double prev = 0.0;
            for (double g = 0.0; g <= 50.0; g += 0.5) {
                const double a = auc_awgn(cfg, g).value;
                if (a < prev) mono = false;
                if (a + cauc_awgn(cfg, g).value != 1.0 && 1.0 - a != cauc_awgn(cfg, g).value) comp = false;
                prev = a;
            }
        }
        c.check(mono, "AUC nondecreasing in gamma on 0:0.5:50", "");
        c.check(comp, "AUC + CAUC = 1 by construction", "");
    }
    const std::vector<double> gammas = {0.5, 1, 2, 5, 10, 20, 50};
    {
        Worst w1;
        Worst w2;
        for (int u = 1; u <= 5; ++u) {
            const auto cfg = DetectorConfig::make(u);
            for (double g : gammas) {
                const double a = auc_awgn(cfg, g).value;
                w1.add(std::fabs(a - auc_awgn_1f1_variant(cfg, g).value), 1e-8, fmt("u=%g gamma=%g", u, g));
                w2.add(std::fabs(a - auc_awgn_series(cfg, g).value), 1e-8, fmt("u=%g gamma=%g", u, g));
            }
        }
        c.check(w1.ok, "Laguerre form vs 1F1 form (1e-8)", w1.detail());
        c.check(w2.ok, "Laguerre form vs Poisson series (1e-8)", w2.detail());
    }
    {
        Worst w;
        for (double u : {0.5, 1.0, 2.0, 5.0, 2.5, 7.3}) {
            const auto cfg = DetectorConfig::make(u);
            for (double g : {0.0, 0.5, 2.0, 5.0, 10.0, 20.0, 50.0}) {
                w.add(std::fabs(auc_awgn(cfg, g).value - auc_quadrature(cfg, g).value), 1e-8, fmt("u=%g gamma=%g", u, g));
            }
        }
        c.check(w.ok, "closed AUC vs quadrature (1e-8)", w.detail());
    }
    {
        bool ok = true;
        for (double u : {1.0, 2.5, 5.0}) {
            const auto pts = roc_points_awgn(DetectorConfig::make(u), 5.0, 51);
            for (std::size_t i = 1; i < pts.size(); ++i) {
                if (pts[i].pd < pts[i - 1].pd || pts[i].pf <= pts[i - 1].pf) ok = false;
            }
        }
        c.check(ok, "ROC traced through threshold_for_pf is nondecreasing", "");
    }
    {
        Worst w;
        for (double u : {0.5, 1.0, 5.0, 7.3}) {
            const auto cfg = DetectorConfig::make(u);
            for (double p : {1e-6, 1e-3, 0.1, 0.5, 0.9, 0.999}) {
                w.add(std::fabs(pf(cfg, threshold_for_pf(cfg, p)) - p), 1e-10, fmt("u=%g pf=%g", u, p));
            }
        }
        c.check(w.ok, "threshold_for_pf round trip (1e-10)", w.detail());
    }
    {
        const double v = pf(DetectorConfig::make(5.0), 10.0);
        c.check(std::fabs(v - 0.4404932850652) < 1e-12, "pf(u=5, lambda=10) finite Poisson sum", fmt("%.13f", v));
    }
}

void suite_hoyt(Checker& c)
{
    c.section("hoyt");
    const std::vector<double> qs = {0.05, 0.1, 0.3, 0.5, 0.75, 1.0};
    const std::vector<double> gbars = {0.1, 1.0, 10.0, 100.0};
    {
        Worst norm;
        Worst mean;
        for (double q : qs) {
            for (double gb : gbars) {
                const auto f = HoytFading::make(q, gb);
                const std::string at = fmt("q=%g gbar=%g", q, gb);
                norm.add(std::fabs(hoyt_moment(f, [](double) { return 1.0; }) - 1.0), 1e-10, at);
                mean.add(std::fabs(hoyt_moment(f, [](double x) { return x; }) - gb) / gb, 1e-8, at);
            }
        }
        c.check(norm.ok, "PDF integrates to 1 (1e-10)", norm.detail());
        c.check(mean.ok, "PDF mean equals gbar (rel 1e-8)", mean.detail());
    }
    {
        Worst w;
        for (double q : qs) {
            for (double gb : gbars) {
                const auto f = HoytFading::make(q, gb);
                double prev_x = 0.0;
                double acc = 0.0;
                for (double r : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
                    const double x = r * gb;
                    acc += integrate_finite([&](double t) { return snr_pdf(f, t); }, prev_x, x);
                    prev_x = x;
                    w.add(std::fabs(snr_cdf(f, x) - acc), 1e-8, fmt("q=%g gbar=%g gamma=%g", q, gb, x));
                }
            }
        }
        c.check(w.ok, "CDF matches integrated PDF (1e-8)", w.detail());
    }
    {
        Worst w;
        for (double q : qs) {
            for (double gb : gbars) {
                const auto f = HoytFading::make(q, gb);
                for (double s : {-2.0, -1.0, -0.5, -0.1}) {
                    const double num = hoyt_moment(f, [s](double x) { return std::exp(s * x); });
                    w.add(std::fabs(snr_mgf(f, s) - num), 1e-8, fmt("q=%g gbar=%g s=%g", q, gb, s));
                }
            }
        }
        c.check(w.ok, "MGF matches integrated PDF (1e-8)", w.detail());
    }
    {
        Worst w;
        for (double gb : gbars) {
            const auto f = HoytFading::make(1.0, gb);
            for (double x : {0.0, 0.01, 0.5, 1.0, 3.0, 20.0}) {
                const double g = x * gb;
                const double pdf_exp = std::exp(-g / gb) / gb;
                const double cdf_exp = -std::expm1(-g / gb);
                w.add(std::fabs(snr_pdf(f, g) - pdf_exp) / pdf_exp, 1e-12, fmt("pdf gbar=%g gamma=%g", gb, g));
                if (g > 0) w.add(std::fabs(snr_cdf(f, g) - cdf_exp) / cdf_exp, 1e-12, fmt("cdf gbar=%g gamma=%g", gb, g));
            }
            for (double s : {-2.0, -0.5, 0.1 / gb}) {
                const double m = 1.0 / (1.0 - s * gb);
                w.add(std::fabs(snr_mgf(f, s) - m) / m, 1e-12, fmt("mgf gbar=%g s=%g", gb, s));
            }
        }
        c.check(w.ok, "q=1 reduces to the exponential law (rel 1e-12)", w.detail());
    }
}

void suite_hoyt_sampling(Checker& c, const McConfig& mc)
{
    Worst w;
    for (double q : {0.1, 0.5, 1.0}) {
        const auto f = HoytFading::make(q, 3.0);
        auto rng = batch_engine(mc.master_seed, 0x5eed);
        const std::size_t n = static_cast<std::size_t>(std::max<std::uint64_t>(mc.trials, 10'000));
        const auto draws = sample_snr(f, rng, n);
        double s2 = 0.0;
        double s4 = 0.0;
        for (double g : draws) {
            s2 += g * g;
            s4 += g * g * g * g;
        }
        const double m2 = s2 / n;
        const double se = std::sqrt((s4 / n - m2 * m2) / n);
        const double k = q * q / ((1 + q * q) * (1 + q * q));
        const double expected = f.gamma_bar * f.gamma_bar * (3.0 - 4.0 * k);
        w.add(std::fabs(m2 - expected) / se, 4.0, fmt("q=%g", q));
    }
    c.check(w.ok, "sampled second moment within 4 s.e.", fmt("max |z| %.3g", w.dev) + " at " + w.where);
}

void suite_average(Checker& c)
{
    c.section("average");
    {
        Worst w;
        const auto cfg = DetectorConfig::make(1.0);
        for (double q : kQ) {
            for (double db : kSnrDb) {
                const auto f = HoytFading::from_db(q, db);
                const double gb = f.gamma_bar;
                const double t = q * gb / (1 + q * q);
                const double oracle = 1.0 - 0.5 / std::sqrt(1.0 + gb + t * t);
                w.add(std::fabs(avg_auc_closed(cfg, f).value - oracle), 1e-10, fmt("q=%g dB=%g", q, db));
            }
        }
        c.check(w.ok, "u=1 average matches the MGF identity (1e-10)", w.detail());
    }
    {
        Worst w;
        for (double u : {1.0, 2.0, 3.0, 4.0, 5.0, 1.5, 2.5, 7.3}) {
            const auto cfg = DetectorConfig::make(u);
            for (double q : kQ) {
                for (double db : kSnrDb) {
                    const auto f = HoytFading::from_db(q, db);
                    w.add(std::fabs(avg_auc_closed(cfg, f).value - avg_auc_quadrature(cfg, f).value), 1e-8,
                          fmt("u=%g q=%g dB=%g", u, q, db));
                }
            }
        }
        c.check(w.ok, "closed average vs quadrature (1e-8)", w.detail());
    }
    {
        Worst w;
        for (int u = 1; u <= 5; ++u) {
            const auto cfg = DetectorConfig::make(u);
            for (double q : kQ) {
                for (double db : kSnrDb) {
                    const auto f = HoytFading::from_db(q, db);
                    w.add(std::fabs(avg_auc_finite(cfg, f).value - avg_auc_series(cfg, f).value), 1e-8,
                          fmt("u=%g q=%g dB=%g", u, q, db));
                }
            }
        }
        c.check(w.ok, "finite sum vs mixed-Poisson series, integer u (1e-8)", w.detail());
    }
    {
        bool mono = true;
        bool comp = true;
        for (double u : {1.0, 2.5, 5.0}) {
            const auto cfg = DetectorConfig::make(u);
            for (double q : kQ) {
                double prev = 0.0;
                for (double db : kSnrDb) {
                    const auto f = HoytFading::from_db(q, db);
                    const double a = avg_auc_closed(cfg, f).value;
                    if (a < prev) mono = false;
                    if (avg_cauc_closed(cfg, f).value != 1.0 - a) comp = false;
                    prev = a;
                }
            }
        }
        c.check(mono, "average AUC nondecreasing in gbar", "");
        c.check(comp, "average AUC + CAUC = 1 by construction", "");
    }
    {
        Worst w;
        for (double u : {1.0, 2.0, 5.0, 2.5}) {
            const auto cfg = DetectorConfig::make(u);
            for (double db : kSnrDb) {
                const auto f = HoytFading::from_db(1.0, db);
                w.add(std::fabs(avg_auc_closed(cfg, f).value - rayleigh_average(u, f.gamma_bar)), 1e-9,
                      fmt("u=%g dB=%g", u, db));
            }
        }
        c.check(w.ok, "q=1 equals the Rayleigh geometric-weight average (1e-9)", w.detail());
    }
    {
        bool ok = true;
        const auto cfg = DetectorConfig::make(5.0);
        for (double db = 5; db <= 20; db += 1) {
            if (!(avg_auc_closed(cfg, HoytFading::from_db(0.1, db)).value <
                  avg_auc_closed(cfg, HoytFading::from_db(1.0, db)).value)) {
                ok = false;
            }
        }
        c.check(ok, "u=5: AUC(q=0.1) < AUC(q=1) for 5..20 dB", "");
    }
}

void suite_mc(Checker& c, const McConfig& mc)
{
    c.section("mc");
    {
        Worst w;
        for (double u : {1.0, 2.5, 5.0}) {
            const auto cfg = DetectorConfig::make(u);
            for (auto [h, g] : std::vector<std::pair<Hypothesis, double>>{{Hypothesis::H0, 0.0}, {Hypothesis::H1, 3.0}}) {
                auto rng = batch_engine(mc.master_seed, 0xa11);
                const std::size_t n = 200'000;
                double s = 0.0;
                double s2 = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const double y = sample_statistic(cfg, g, h, rng);
                    s += y;
                    s2 += y * y;
                }
                const double m = s / n;
                const double se = std::sqrt((s2 / n - m * m) / n);
                w.add(std::fabs(m - (2 * u + 2 * g)) / se, 4.0, fmt("u=%g gamma=%g", u, g));
            }
        }
        c.check(w.ok, "statistic means 2u and 2u + 2 gamma within 4 s.e.", fmt("max |z| %.3g", w.dev) + " at " + w.where);
    }
    {
        Worst w;
        const auto e0 = estimate_auc(DetectorConfig::make(3.0), 0.0, mc);
        w.add(std::fabs(e0.value - 0.5) / e0.std_error, 3.0, "u=3 gamma=0");
        const auto e1 = estimate_auc(DetectorConfig::make(1.0), 2.0, mc);
        w.add(std::fabs(e1.value - (1.0 - 0.5 * std::exp(-1.0))) / e1.std_error, 3.0, "u=1 gamma=2");
        for (double u : {2.5, 5.0}) {
            const auto cfg = DetectorConfig::make(u);
            for (double g : {1.0, 5.0}) {
                const auto e = estimate_auc(cfg, g, mc);
                w.add(std::fabs(e.value - auc_quadrature(cfg, g).value) / e.std_error, 3.0, fmt("u=%g gamma=%g", u, g));
            }
        }
        c.check(w.ok, "fixed-SNR rank AUC within 3 s.e. of quadrature", fmt("max |z| %.3g", w.dev) + " at " + w.where);
    }
    {
        Worst w;
        for (double u : {1.0, 5.0}) {
            const auto cfg = DetectorConfig::make(u);
            for (double lam : {5.0, 12.0}) {
                const auto e0 = estimate_exceedance(cfg, 0.0, Hypothesis::H0, lam, mc);
                w.add(std::fabs(e0.value - pf(cfg, lam)) / e0.std_error, 4.0, fmt("H0 u=%g lambda=%g", u, lam));
                const auto e1 = estimate_exceedance(cfg, 2.0, Hypothesis::H1, lam, mc);
                w.add(std::fabs(e1.value - pd(cfg, 2.0, lam)) / e1.std_error, 4.0, fmt("H1 u=%g lambda=%g", u, lam));
            }
        }
        c.check(w.ok, "empirical exceedance matches pf and pd within 4 s.e.", fmt("max |z| %.3g", w.dev) + " at " + w.where);
    }
    {
        Worst w;
        const auto cfg = DetectorConfig::make(5.0);
        for (double q : {0.1, 0.5, 1.0}) {
            for (double db : {0.0, 10.0, 20.0}) {
                const auto f = HoytFading::from_db(q, db);
                const auto e = estimate_auc(cfg, f, mc);
                w.add(std::fabs(e.value - avg_auc_closed(cfg, f).value) / e.std_error, 3.0, fmt("q=%g dB=%g", q, db));
            }
        }
        c.check(w.ok, "Hoyt rank AUC within 3 s.e. of the closed form (u=5)",
                fmt("max |z| %.3g", w.dev) + " at " + w.where);
    }
    {
        McConfig a = mc;
        a.trials = std::min<std::uint64_t>(mc.trials, 300'000);
        a.batch_size = 16'384;
        a.workers = 1;
        McConfig b = a;
        b.workers = 3;
        const auto f = HoytFading::from_db(0.3, 5.0);
        const auto cfg = DetectorConfig::make(2.5);
        const auto ea = estimate_auc(cfg, f, a);
        const auto eb = estimate_auc(cfg, f, b);
        c.check(ea.value == eb.value && ea.std_error == eb.std_error, "estimate independent of worker count",
                fmt("%.17g vs %.17g", ea.value, eb.value));
    }
}

// A suite that throws is recorded as one failed check instead of ending the run.
void guarded(Checker& checker, const char* name, const std::function<void()>& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        checker.check(false, std::string(name) + " suite aborted", e.what());
    }
}

}  // namespace

bool run_suite(const std::string& suite, std::ostream& out, const ValidateOptions& options, Checker& checker)
{
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "specfun") {
        guarded(checker, "specfun", [&] { suite_specfun(checker); });
        known = true;
    }
    if (all || suite == "detector") {
        guarded(checker, "detector", [&] { suite_detector(checker); });
        known = true;
    }
    if (all || suite == "hoyt") {
        guarded(checker, "hoyt", [&] {
            suite_hoyt(checker);
            suite_hoyt_sampling(checker, options.mc);
        });
        known = true;
    }
    if (all || suite == "average") {
        guarded(checker, "average", [&] { suite_average(checker); });
        known = true;
    }
    if (all || suite == "mc") {
        guarded(checker, "mc", [&] { suite_mc(checker, options.mc); });
        known = true;
    }
    if (all || suite == "errata") {
        guarded(checker, "errata", [&] { run_errata(out, checker); });
        known = true;
    }
    return known;
}

}  // namespace edsense::cli
