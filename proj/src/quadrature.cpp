#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "edsense/error.hpp"

namespace edsense::detail {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Panel {
    double a;
    double b;
    double value;
    double error;
    int depth;

    bool operator<(const Panel& other) const { return error < other.error; }
};

constexpr int kMaxPanels = 20'000;

}  // namespace

QuadResult integrate_half_line(const std::function<double(double)>& f, double scale, std::vector<double> breaks,
                               double rel_tol, double abs_tol, int max_depth, const char* what)
{
    auto mapped = [&](double t) {
        if (t >= 1.0) return 0.0;
        const double one_minus = 1.0 - t;
        const double x = scale * t / one_minus;
        const double v = f(x);
        return v == 0.0 ? 0.0 : v * scale / (one_minus * one_minus);
    };
    auto evaluate = [&](double a, double b, int depth) {
        double err = 0.0;
        const double v = Rule::integrate(mapped, a, b, 0, 0.0, &err);
        if (!std::isfinite(v)) {
            throw ConvergenceError(std::string(what) + ": non-finite integrand");
        }
        return Panel{a, b, v, err, depth};
    };

    std::vector<double> nodes{0.0};
    std::sort(breaks.begin(), breaks.end());
    for (double x : breaks) {
        if (!(x > 0.0) || !std::isfinite(x)) continue;
        const double t = x / (x + scale);
        if (t > nodes.back() + 1e-9 && t < 1.0 - 1e-9) nodes.push_back(t);
    }
    nodes.push_back(1.0);

    std::priority_queue<Panel> heap;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        Panel p = evaluate(nodes[i], nodes[i + 1], 0);
        value += p.value;
        error += p.error;
        heap.push(p);
    }

    int panels = static_cast<int>(heap.size());
    while (error > std::max(rel_tol * std::fabs(value), abs_tol)) {
        Panel worst = heap.top();
        if (worst.depth >= max_depth || panels >= kMaxPanels) {
            throw ConvergenceError(std::string(what) + ": quadrature refinement limit reached (error estimate " +
                                   std::to_string(error) + ")");
        }
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate(worst.a, mid, worst.depth + 1);
        Panel right = evaluate(mid, worst.b, worst.depth + 1);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }

    // Recompute from the panels to shed the rounding of the running updates.
    value = 0.0;
    error = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    return QuadResult{value, error, panels};
}

}  // namespace edsense::detail
