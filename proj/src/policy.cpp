#include "edsense/policy.hpp"

#include "edsense/error.hpp"

namespace edsense {

void EvalPolicy::validate() const
{
    if (!(rel_tol > 0.0 && rel_tol < 1e-2)) throw DomainError("EvalPolicy: rel_tol must lie in (0, 1e-2)");
    if (max_terms < 50) throw DomainError("EvalPolicy: max_terms must be at least 50");
    if (quad_levels < 5) throw DomainError("EvalPolicy: quad_levels must be at least 5");
}

std::string_view method_name(Method m)
{
    switch (m) {
    case Method::closed_integer:
        return "closed_integer";
    case Method::closed_series:
        return "closed_series";
    case Method::quadrature:
        return "quadrature";
    case Method::monte_carlo:
        return "monte_carlo";
    }
    return "unknown";
}

}  // namespace edsense
