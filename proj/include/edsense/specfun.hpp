#ifndef EDSENSE_SPECFUN_HPP
#define EDSENSE_SPECFUN_HPP

///
/// \file specfun.hpp
///
/// Special functions used by the energy-detector formulas: gamma family,
/// regularized incomplete gamma, modified Bessel I, generalized Marcum-Q,
/// confluent (1F1) and Gauss (2F1) hypergeometric functions, generalized
/// Laguerre polynomials, Pochhammer symbols and real binomial coefficients.
///
/// All series are accumulated in `long double`. Every function is pure.
///

namespace edsense::specfun {

/// Truncation controls shared by the series evaluators.
struct FunctionAccuracy {
    double rel_tol = 1e-13;
    int max_terms = 10'000;

    /// Throws DomainError unless 0 < rel_tol < 1e-6 and max_terms >= 100.
    void validate() const;
};

double ln_gamma(double x);

/// log|Gamma(x)| for any non-pole real x; `sign` receives the sign of Gamma(x).
double log_abs_gamma(double x, int& sign);

/// 1/Gamma(x), equal to zero at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

double digamma(double x);

/// Q(a, x) = Gamma(a, x) / Gamma(a).
double reg_upper_gamma(double a, double x, const FunctionAccuracy& acc = {});

/// P(a, x) = 1 - Q(a, x), computed directly where it is the small side.
double reg_lower_gamma(double a, double x, const FunctionAccuracy& acc = {});

/// I_nu(x). Throws std::overflow_error when the value exceeds double range.
double bessel_i(double nu, double x, const FunctionAccuracy& acc = {});

/// exp(-x) * I_nu(x); finite for every admissible argument.
double bessel_i_scaled(double nu, double x, const FunctionAccuracy& acc = {});

/// Generalized Marcum Q_m(a, b) for real order m > 0, evaluated as the
/// Poisson-weighted sum  sum_k e^{-a^2/2} (a^2/2)^k / k! * Q(m + k, b^2 / 2).
double marcum_q(double m, double a, double b, const FunctionAccuracy& acc = {});

/// 1F1(a; b; x). Negative x goes through Kummer's transformation
/// 1F1(a; b; x) = e^x 1F1(b - a; b; -x).
double kummer_1f1(double a, double b, double x, const FunctionAccuracy& acc = {});

/// 1F1(a; b; x) / Gamma(b), continuous across b = 0, -1, -2, ...
double kummer_1f1_regularized(double a, double b, double x, const FunctionAccuracy& acc = {});

/// 2F1(a, b; c; z) for 0 <= z < 1. The direct series is used for z <= 1/2;
/// above that the z -> 1 - z connection formula, including the logarithmic
/// forms when c - a - b is an integer.
double gauss_2f1(double a, double b, double c, double z, const FunctionAccuracy& acc = {});

/// Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
double laguerre(int n, double alpha, double x);

/// (a)_n = Gamma(a + n) / Gamma(a) for any integer n (negative n allowed).
double pochhammer(double a, int n);

/// Binomial coefficient for real `top` and integer k >= 0.
double binomial(double top, int k);

}  // namespace edsense::specfun

#endif  // EDSENSE_SPECFUN_HPP
