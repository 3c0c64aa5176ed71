#ifndef EDSENSE_SRC_QUADRATURE_HPP
#define EDSENSE_SRC_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace edsense::detail {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

// Integral of f over [0, inf) after the map x = scale * t / (1 - t).
// Panels are split at the images of `breaks`; refinement bisects the panel
// with the largest error estimate until the summed estimate is below
// max(rel_tol * |value|, abs_tol) or a panel would exceed max_depth.
QuadResult integrate_half_line(const std::function<double(double)>& f, double scale, std::vector<double> breaks,
                               double rel_tol, double abs_tol, int max_depth, const char* what);

}  // namespace edsense::detail

#endif  // EDSENSE_SRC_QUADRATURE_HPP
