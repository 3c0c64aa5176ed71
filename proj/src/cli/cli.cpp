#include "edsense/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "edsense/error.hpp"
#include "edsense/fading.hpp"
#include "edsense/mc.hpp"
#include "internal.hpp"

namespace edsense::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Metric { auc, cauc, pd, pf, roc };
enum class MethodKind { closed, series, quadrature, mc };

struct Options {
    std::string metric = "auc";
    std::string method;
    double u = 5.0;
    std::string q = "1";
    std::string snr_db;
    std::optional<double> lambda;
    int points = 101;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    double rel_tol = 1e-10;
    std::string out_path;
    unsigned workers = 0;
    std::string suite = "all";
};

struct Context {
    DetectorConfig cfg;
    EvalPolicy policy;
    McConfig mc;
    std::optional<double> lambda;
    int points = 101;
};

Metric parse_metric(const std::string& s, bool allow_roc)
{
    if (s == "auc") return Metric::auc;
    if (s == "cauc") return Metric::cauc;
    if (s == "pd") return Metric::pd;
    if (s == "pf") return Metric::pf;
    if (s == "roc" && allow_roc) return Metric::roc;
    throw UsageError("unknown metric '" + s + "'");
}

std::vector<MethodKind> supported_methods(Metric m)
{
    switch (m) {
    case Metric::auc:
    case Metric::cauc:
        return {MethodKind::closed, MethodKind::series, MethodKind::quadrature, MethodKind::mc};
    case Metric::pd:
        return {MethodKind::quadrature, MethodKind::mc};
    case Metric::pf:
        return {MethodKind::closed, MethodKind::mc};
    case Metric::roc:
        return {MethodKind::quadrature};
    }
    return {};
}

std::vector<MethodKind> parse_methods(const std::string& s, Metric metric)
{
    const auto supported = supported_methods(metric);
    if (s.empty()) return {supported.front()};
    if (s == "all") return supported;
    MethodKind kind;
    if (s == "closed") {
        kind = MethodKind::closed;
    } else if (s == "series") {
        kind = MethodKind::series;
    } else if (s == "quadrature") {
        kind = MethodKind::quadrature;
    } else if (s == "mc") {
        kind = MethodKind::mc;
    } else {
        throw UsageError("unknown method '" + s + "'");
    }
    if (std::find(supported.begin(), supported.end(), kind) == supported.end()) {
        throw UsageError("method '" + s + "' is not available for this metric");
    }
    return {kind};
}

double parse_number(const std::string& text)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + text + "'");
    }
    if (used != text.size()) throw UsageError("not a number: '" + text + "'");
    return v;
}

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_number(item));
    if (values.empty()) throw UsageError("empty list");
    return values;
}

std::vector<double> parse_range(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() == 1) return {parse_number(parts[0])};
    if (parts.size() != 3) throw UsageError("SNR range must be start:stop:step");
    const double start = parse_number(parts[0]);
    const double stop = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    if (!std::isfinite(start) || !std::isfinite(stop) || !(step > 0.0) || !std::isfinite(step) || stop < start) {
        throw UsageError("SNR range needs finite start <= stop and step > 0");
    }
    const double count = std::floor((stop - start) / step + 1e-9) + 1.0;
    if (count > 100'000) throw UsageError("SNR range has too many points");
    std::vector<double> values;
    for (int i = 0; i < static_cast<int>(count); ++i) values.push_back(start + i * step);
    return values;
}

void check_q(double q)
{
    if (!(q > 0.0 && q <= 1.0)) throw UsageError("q must lie in (0, 1]");
}

void check_snr(double snr_db)
{
    if (std::isnan(snr_db) || snr_db == std::numeric_limits<double>::infinity()) {
        throw UsageError("SNR in dB must be finite or -inf");
    }
}

MetricValue from_mc(const McEstimate& e)
{
    return MetricValue{e.value, Method::monte_carlo, static_cast<int>(std::min<std::uint64_t>(e.trials, 1u << 30)),
                       e.std_error};
}

Method closed_label(const DetectorConfig& cfg) { return cfg.is_integer ? Method::closed_integer : Method::closed_series; }

std::vector<RocPoint> averaged_roc(const Context& ctx, double q, double snr_db, double& error)
{
    const bool faded = std::isfinite(snr_db);
    std::vector<RocPoint> points;
    error = 0.0;
    points.push_back({0.0, 0.0});
    for (int i = 1; i + 1 < ctx.points; ++i) {
        const double target = static_cast<double>(i) / (ctx.points - 1);
        const double lambda = threshold_for_pf(ctx.cfg, target);
        double p = 0.0;
        if (faded) {
            const MetricValue m = avg_pd_quadrature(ctx.cfg, HoytFading::from_db(q, snr_db), lambda, ctx.policy);
            p = m.value;
            error += m.est_error;
        } else {
            p = pd(ctx.cfg, 0.0, lambda);
        }
        points.push_back({target, p});
    }
    points.push_back({1.0, 1.0});
    return points;
}

double trapezoid(const std::vector<RocPoint>& pts, std::size_t stride)
{
    double area = 0.0;
    for (std::size_t i = stride; i < pts.size(); i += stride) {
        area += 0.5 * (pts[i].pf - pts[i - stride].pf) * (pts[i].pd + pts[i - stride].pd);
    }
    return area;
}

MetricValue evaluate(Metric metric, MethodKind method, const Context& ctx, double q, double snr_db)
{
    const bool faded = std::isfinite(snr_db);
    const DetectorConfig& cfg = ctx.cfg;
    switch (metric) {
    case Metric::auc:
    case Metric::cauc: {
        MetricValue m;
        if (faded) {
            const HoytFading f = HoytFading::from_db(q, snr_db);
            switch (method) {
            case MethodKind::closed: m = avg_auc_closed(cfg, f, ctx.policy); break;
            case MethodKind::series: m = avg_auc_series(cfg, f, ctx.policy); break;
            case MethodKind::quadrature: m = avg_auc_quadrature(cfg, f, ctx.policy); break;
            case MethodKind::mc: m = from_mc(estimate_auc(cfg, f, ctx.mc)); break;
            }
        } else {
            switch (method) {
            case MethodKind::closed: m = auc_awgn(cfg, 0.0, ctx.policy); break;
            case MethodKind::series: m = auc_awgn_series(cfg, 0.0, ctx.policy); break;
            case MethodKind::quadrature: m = auc_quadrature(cfg, 0.0, ctx.policy); break;
            case MethodKind::mc: m = from_mc(estimate_auc(cfg, 0.0, ctx.mc)); break;
            }
        }
        if (metric == Metric::cauc) m.value = 1.0 - m.value;
        return m;
    }
    case Metric::pd: {
        const double lambda = *ctx.lambda;
        if (method == MethodKind::mc) {
            if (faded) return from_mc(estimate_exceedance(cfg, HoytFading::from_db(q, snr_db), lambda, ctx.mc));
            return from_mc(estimate_exceedance(cfg, 0.0, Hypothesis::H1, lambda, ctx.mc));
        }
        if (faded) return avg_pd_quadrature(cfg, HoytFading::from_db(q, snr_db), lambda, ctx.policy);
        return MetricValue{pd(cfg, 0.0, lambda), closed_label(cfg), 0, 0.0};
    }
    case Metric::pf: {
        const double lambda = *ctx.lambda;
        if (method == MethodKind::mc) return from_mc(estimate_exceedance(cfg, 0.0, Hypothesis::H0, lambda, ctx.mc));
        return MetricValue{pf(cfg, lambda), closed_label(cfg), 0, 0.0};
    }
    case Metric::roc: {
        double quad_error = 0.0;
        const auto pts = averaged_roc(ctx, q, snr_db, quad_error);
        const double fine = trapezoid(pts, 1);
        double err = quad_error;
        if ((pts.size() - 1) % 2 == 0) err += std::fabs(fine - trapezoid(pts, 2)) / 3.0;
        return MetricValue{fine, Method::quadrature, ctx.points, err};
    }
    }
    throw UsageError("unhandled metric");
}

std::string metric_name(Metric m)
{
    switch (m) {
    case Metric::auc: return "auc";
    case Metric::cauc: return "cauc";
    case Metric::pd: return "pd";
    case Metric::pf: return "pf";
    case Metric::roc: return "roc";
    }
    return "unknown";
}

std::string method_label(MethodKind m)
{
    switch (m) {
    case MethodKind::closed: return "closed";
    case MethodKind::series: return "series";
    case MethodKind::quadrature: return "quadrature";
    case MethodKind::mc: return "mc";
    }
    return "unknown";
}

Context make_context(const Options& o, Metric metric)
{
    Context ctx;
    try {
        ctx.cfg = DetectorConfig::make(o.u);
        ctx.policy.rel_tol = o.rel_tol;
        ctx.policy.validate();
        ctx.mc.trials = o.trials;
        ctx.mc.master_seed = o.seed;
        ctx.mc.workers = o.workers;
        ctx.mc.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    ctx.lambda = o.lambda;
    ctx.points = o.points;
    if ((metric == Metric::pd || metric == Metric::pf) && !ctx.lambda) {
        throw UsageError("--lambda is required for metric " + metric_name(metric));
    }
    if (ctx.lambda && !(*ctx.lambda >= 0.0)) throw UsageError("--lambda must be nonnegative");
    if (ctx.points < 2) throw UsageError("--points must be at least 2");
    return ctx;
}

// Evaluates every (q, snr, method) row in order; failed rows become nan.
bool emit_rows(Metric metric, const std::vector<MethodKind>& methods, const Context& ctx,
               const std::vector<double>& qs, const std::vector<double>& snrs, std::ostream& out, std::ostream& err)
{
    bool all_ok = true;
    write_curve_header(out);
    for (double q : qs) {
        for (double snr : snrs) {
            for (MethodKind method : methods) {
                CurveRow row{snr, q, ctx.cfg.u, metric_name(metric), method_label(method), 0.0, 0.0};
                try {
                    const MetricValue m = evaluate(metric, method, ctx, q, snr);
                    row.value = m.value;
                    row.est_error = m.est_error;
                } catch (const std::exception& e) {
                    all_ok = false;
                    row.value = std::numeric_limits<double>::quiet_NaN();
                    row.est_error = 1.0;
                    err << "row snr_db=" << format_double(snr) << " q=" << format_double(q) << " failed: " << e.what()
                        << '\n';
                }
                write_curve_row(out, row);
            }
        }
    }
    return all_ok;
}

void add_common(CLI::App* cmd, Options& o, bool with_lambda, bool with_mc)
{
    cmd->add_option("--u", o.u, "time-bandwidth product");
    cmd->add_option("--q", o.q, "Hoyt parameter(s), comma separated");
    cmd->add_option("--snr-db", o.snr_db, "average SNR in dB (value, -inf, or start:stop:step)");
    cmd->add_option("--rel-tol", o.rel_tol, "relative tolerance for series and quadrature");
    cmd->add_option("--out", o.out_path, "output path (default: standard output)");
    if (with_lambda) cmd->add_option("--lambda", o.lambda, "energy threshold");
    if (with_mc) {
        cmd->add_option("--trials", o.trials, "Monte-Carlo trials");
        cmd->add_option("--seed", o.seed, "Monte-Carlo master seed");
        cmd->add_option("--workers", o.workers, "Monte-Carlo worker threads (0: all cores)");
    }
}

int with_output(const Options& o, std::ostream& out, const std::function<int(std::ostream&)>& body)
{
    if (o.out_path.empty()) return body(out);
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + o.out_path + "'");
    const int code = body(file);
    file.flush();
    if (!file) throw UsageError("failed writing '" + o.out_path + "'");
    return code;
}

int cmd_curve(const Options& o, bool single, std::ostream& out, std::ostream& err)
{
    const Metric metric = parse_metric(o.metric, !single);
    const auto methods = parse_methods(o.method, metric);
    const Context ctx = make_context(o, metric);
    const std::vector<double> qs = parse_list(o.q);
    std::string snr_text = o.snr_db;
    if (snr_text.empty()) {
        if (metric != Metric::pf) throw UsageError("--snr-db is required");
        snr_text = "-inf";
    }
    const std::vector<double> snrs = parse_range(snr_text);
    if (single && (qs.size() != 1 || snrs.size() != 1)) throw UsageError("point takes a single q and SNR");
    for (double q : qs) check_q(q);
    for (double s : snrs) check_snr(s);
    return with_output(o, out, [&](std::ostream& sink) {
        return emit_rows(metric, methods, ctx, qs, snrs, sink, err) ? kOk : kNonConvergence;
    });
}

int cmd_roc(const Options& o, std::ostream& out, std::ostream& err)
{
    const Context ctx = make_context(o, Metric::roc);
    const std::vector<double> qs = parse_list(o.q);
    if (o.snr_db.empty()) throw UsageError("--snr-db is required");
    const std::vector<double> snrs = parse_range(o.snr_db);
    if (qs.size() != 1 || snrs.size() != 1) throw UsageError("roc takes a single q and SNR");
    check_q(qs[0]);
    check_snr(snrs[0]);
    return with_output(o, out, [&](std::ostream& sink) {
        double error = 0.0;
        std::vector<RocPoint> pts;
        try {
            pts = averaged_roc(ctx, qs[0], snrs[0], error);
        } catch (const ConvergenceError& e) {
            err << "roc failed: " << e.what() << '\n';
            return static_cast<int>(kNonConvergence);
        }
        sink << "pf,pd\n";
        for (const auto& p : pts) sink << format_double(p.pf) << ',' << format_double(p.pd) << '\n';
        return static_cast<int>(kOk);
    });
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err)
{
    ValidateOptions options;
    options.mc.trials = o.trials;
    options.mc.master_seed = o.seed;
    options.mc.workers = o.workers;
    try {
        options.mc.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return with_output(o, out, [&](std::ostream& sink) {
        Checker checker(sink);
        if (!run_suite(o.suite, sink, options, checker)) {
            err << "unknown suite '" << o.suite << "'\n";
            return static_cast<int>(kUsageError);
        }
        sink << "\nsummary: " << checker.passed() << " passed, " << checker.failed() << " failed\n";
        return checker.failed() == 0 ? static_cast<int>(kOk) : static_cast<int>(kValidationFailure);
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Energy-detector AUC/CAUC over Hoyt fading"};
    app.name("edsense");
    app.require_subcommand(1);

    Options o;
    auto* point = app.add_subcommand("point", "evaluate one metric value");
    point->add_option("--metric", o.metric, "auc | cauc | pd | pf");
    point->add_option("--method", o.method, "closed | series | quadrature | mc | all");
    add_common(point, o, true, true);

    auto* sweep = app.add_subcommand("sweep", "evaluate a metric over q values and an SNR range");
    sweep->add_option("--metric", o.metric, "auc | cauc | pd | pf | roc");
    sweep->add_option("--method", o.method, "closed | series | quadrature | mc | all");
    sweep->add_option("--points", o.points, "ROC grid size for --metric roc");
    add_common(sweep, o, true, true);

    auto* roc = app.add_subcommand("roc", "average ROC curve as pf,pd pairs");
    roc->add_option("--points", o.points, "number of ROC points");
    add_common(roc, o, false, false);

    auto* validate = app.add_subcommand("validate", "run a validation suite");
    validate->add_option("--suite", o.suite, "specfun | detector | hoyt | average | mc | errata | all");
    validate->add_option("--trials", o.trials, "Monte-Carlo trials");
    validate->add_option("--seed", o.seed, "Monte-Carlo master seed");
    validate->add_option("--workers", o.workers, "Monte-Carlo worker threads (0: all cores)");
    validate->add_option("--out", o.out_path, "output path (default: standard output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*point) return cmd_curve(o, true, out, err);
        if (*sweep) return cmd_curve(o, false, out, err);
        if (*roc) return cmd_roc(o, out, err);
        if (*validate) return cmd_validate(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kNonConvergence;
    }
    return kUsageError;
}

}  // namespace edsense::cli
