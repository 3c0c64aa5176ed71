#ifndef EDSENSE_POLICY_HPP
#define EDSENSE_POLICY_HPP

#include <string_view>

namespace edsense {

/// Truncation and refinement controls for the detector-level evaluators.
struct EvalPolicy {
    double rel_tol = 1e-10;
    int max_terms = 5'000;
    int quad_levels = 20;

    /// Throws DomainError unless rel_tol > 0, max_terms >= 50, quad_levels >= 5.
    void validate() const;
};

enum class Method { closed_integer, closed_series, quadrature, monte_carlo };

std::string_view method_name(Method m);

/// A probability-valued result together with how it was obtained.
struct MetricValue {
    double value = 0.0;
    Method method = Method::closed_integer;
    int terms_used = 0;
    double est_error = 0.0;
};

}  // namespace edsense

#endif  // EDSENSE_POLICY_HPP
