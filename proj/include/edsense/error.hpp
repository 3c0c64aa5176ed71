#ifndef EDSENSE_ERROR_HPP
#define EDSENSE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace edsense {

/// Argument outside the mathematical domain of the function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A series, continued fraction, root finder or quadrature hit its iteration
/// cap before meeting the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace edsense

#endif  // EDSENSE_ERROR_HPP
