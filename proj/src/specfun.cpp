#include "edsense/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "edsense/error.hpp"

namespace edsense::specfun {

namespace {

using Real = long double;

constexpr Real kPi = std::numbers::pi_v<long double>;
constexpr Real kLnSqrt2Pi = 0.918938533204672741780329736405617639861L;
constexpr Real kLn2 = std::numbers::ln2_v<long double>;

[[noreturn]] void domain(const std::string& what) { throw DomainError(what); }

[[noreturn]] void no_convergence(const std::string& what)
{
    throw ConvergenceError(what + ": series did not converge within max_terms");
}

bool is_nonpositive_integer(Real x) { return x <= 0 && x == std::floor(x); }

bool is_integer(Real x) { return x == std::floor(x); }

double to_double(Real v, const char* what)
{
    if (std::fabs(v) > std::numeric_limits<double>::max()) {
        throw std::overflow_error(std::string(what) + ": result exceeds double range");
    }
    return static_cast<double>(v);
}

// Tracks the "two consecutive small terms" stopping rule.
class Termination {
public:
    explicit Termination(const FunctionAccuracy& acc) : tol_(acc.rel_tol) {}

    bool done(Real term, Real sum)
    {
        if (std::fabs(term) <= tol_ * std::fabs(sum)) {
            return ++small_ >= 2;
        }
        small_ = 0;
        return false;
    }

private:
    Real tol_;
    int small_ = 0;
};

Real sin_pi(Real x)
{
    Real r = std::fmod(x, Real(2));
    if (r < 0) r += 2;
    Real sign = 1;
    if (r >= 1) {
        r -= 1;
        sign = -1;
    }
    if (r > 0.5L) r = 1 - r;
    return sign * std::sin(kPi * r);
}

Real cos_pi(Real x) { return sin_pi(x + 0.5L); }

Real stirling_ln_gamma(Real x)
{
    const Real inv = 1 / x;
    const Real inv2 = inv * inv;
    const Real series =
        inv * (1.0L / 12 +
               inv2 * (-1.0L / 360 +
                       inv2 * (1.0L / 1260 +
                               inv2 * (-1.0L / 1680 +
                                       inv2 * (1.0L / 1188 +
                                               inv2 * (-691.0L / 360360 + inv2 * (1.0L / 156)))))));
    return (x - 0.5L) * std::log(x) - x + kLnSqrt2Pi + series;
}

// ln Gamma(x) for x > 0.
Real lgamma_pos(Real x)
{
    if (x == 1 || x == 2) return 0;
    if (x < 15) return std::log(std::tgamma(x));
    return stirling_ln_gamma(x);
}

// log|Gamma(x)| with sign, x not a pole.
Real lgamma_signed(Real x, int& sign)
{
    if (x > 0) {
        sign = 1;
        return lgamma_pos(x);
    }
    if (is_nonpositive_integer(x)) domain("gamma function pole at nonpositive integer");
    const Real s = sin_pi(x);
    sign = s > 0 ? 1 : -1;
    return std::log(kPi) - std::log(std::fabs(s)) - lgamma_pos(1 - x);
}

// prod Gamma(num) / prod Gamma(den); a pole in the denominator gives 0.
template <std::size_t N, std::size_t M>
Real gamma_ratio(const Real (&num)[N], const Real (&den)[M])
{
    for (Real d : den) {
        if (is_nonpositive_integer(d)) return 0;
    }
    Real log_value = 0;
    int sign = 1;
    for (Real n : num) {
        int s = 1;
        log_value += lgamma_signed(n, s);
        sign *= s;
    }
    for (Real d : den) {
        int s = 1;
        log_value -= lgamma_signed(d, s);
        sign *= s;
    }
    return sign * std::exp(log_value);
}

Real digamma_ld(Real x)
{
    if (is_nonpositive_integer(x)) domain("digamma pole at nonpositive integer");
    if (x < 0) return digamma_ld(1 - x) - kPi * cos_pi(x) / sin_pi(x);
    Real result = 0;
    while (x < 20) {
        result -= 1 / x;
        x += 1;
    }
    const Real inv2 = 1 / (x * x);
    const Real tail =
        inv2 * (1.0L / 12 -
                inv2 * (1.0L / 120 -
                        inv2 * (1.0L / 252 -
                                inv2 * (1.0L / 240 - inv2 * (1.0L / 132 - inv2 * (691.0L / 32760 - inv2 / 12))))));
    return result + std::log(x) - 0.5L / x - tail;
}

//------------------------------------------------------------------------------
// Incomplete gamma
//------------------------------------------------------------------------------

Real log_gamma_prefactor(Real a, Real x) { return a * std::log(x) - x; }

// P(a, x) by its power series.
Real lower_gamma_series(Real a, Real x, const FunctionAccuracy& acc)
{
    Real term = 1;
    Real sum = 1;
    Termination stop(acc);
    for (int n = 1; n <= acc.max_terms; ++n) {
        term *= x / (a + n);
        sum += term;
        if (stop.done(term, sum)) {
            return sum * std::exp(log_gamma_prefactor(a, x) - lgamma_pos(a + 1));
        }
    }
    no_convergence("reg_lower_gamma");
}

// Q(a, x) by the Legendre continued fraction (modified Lentz).
Real upper_gamma_cf(Real a, Real x, const FunctionAccuracy& acc)
{
    constexpr Real tiny = std::numeric_limits<Real>::min() / std::numeric_limits<Real>::epsilon();
    Real b = x + 1 - a;
    Real c = 1 / tiny;
    Real d = 1 / b;
    Real h = d;
    // The fraction converges quickly, so run it to long double precision.
    const Real tol = std::min<Real>(acc.rel_tol, 1e-18L);
    int small = 0;
    for (int i = 1; i <= acc.max_terms; ++i) {
        const Real an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1 / d;
        const Real delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1) <= tol) {
            if (++small >= 2) return std::exp(log_gamma_prefactor(a, x) - lgamma_pos(a)) * h;
        } else {
            small = 0;
        }
    }
    no_convergence("reg_upper_gamma");
}

void check_gamma_args(double a, double x)
{
    if (!(a > 0)) domain("incomplete gamma: a must be positive");
    if (!(x >= 0)) domain("incomplete gamma: x must be nonnegative");
}

Real reg_upper_gamma_ld(Real a, Real x, const FunctionAccuracy& acc)
{
    if (x == 0) return 1;
    if (std::isinf(x)) return 0;
    if (x < a + 1) return std::clamp<Real>(1 - lower_gamma_series(a, x, acc), 0, 1);
    return std::clamp<Real>(upper_gamma_cf(a, x, acc), 0, 1);
}

//------------------------------------------------------------------------------
// Modified Bessel function of the first kind
//------------------------------------------------------------------------------

// e^{-x} I_nu(x) from the ascending series, rescaled to survive large x.
Real bessel_i_scaled_series(Real nu, Real x, const FunctionAccuracy& acc)
{
    const Real y = x * x / 4;
    Real term = 1;
    Real sum = 1;
    Real log_scale = 0;
    constexpr Real kRescale = 1e300L;
    const Real log_rescale = std::log(kRescale);
    Termination stop(acc);
    const int cap = std::max(acc.max_terms, static_cast<int>(2 * x) + 100);
    for (int k = 1; k <= cap; ++k) {
        term *= y / (k * (nu + k));
        sum += term;
        if (sum > kRescale) {
            sum /= kRescale;
            term /= kRescale;
            log_scale += log_rescale;
        }
        if (stop.done(term, sum)) {
            const Real log_pref = nu * std::log(x / 2) - lgamma_pos(nu + 1) - x + log_scale;
            return sum * std::exp(log_pref);
        }
    }
    no_convergence("bessel_i");
}

// Hankel asymptotic expansion of e^{-x} I_nu(x); returns false when the
// expansion starts diverging before reaching full precision.
bool bessel_i_scaled_asymptotic(Real nu, Real x, Real& out)
{
    const Real mu = 4 * nu * nu;
    Real term = 1;
    Real sum = 1;
    for (int k = 1; k < 200; ++k) {
        const Real odd = 2 * k - 1;
        const Real next = -term * (mu - odd * odd) / (8 * k * x);
        if (next == 0) break;
        if (std::fabs(next) > std::fabs(term)) return false;
        term = next;
        sum += term;
        if (std::fabs(term) < std::numeric_limits<Real>::epsilon() * std::fabs(sum)) break;
    }
    out = sum / std::sqrt(2 * kPi * x);
    return true;
}

Real bessel_i_scaled_ld(Real nu, Real x, const FunctionAccuracy& acc)
{
    if (x == 0) return nu == 0 ? 1 : 0;
    if (x >= 30 && x >= 2 * nu * nu) {
        Real value = 0;
        if (bessel_i_scaled_asymptotic(nu, x, value)) return value;
    }
    return bessel_i_scaled_series(nu, x, acc);
}

void check_bessel_args(double nu, double x)
{
    if (!(nu >= 0)) domain("bessel_i: order must be nonnegative");
    if (!(x >= 0)) domain("bessel_i: argument must be nonnegative");
}

//------------------------------------------------------------------------------
// Hypergeometric series
//------------------------------------------------------------------------------

Real series_1f1(Real a, Real b, Real x, const FunctionAccuracy& acc)
{
    Real term = 1;
    Real sum = 1;
    Termination stop(acc);
    for (int n = 0; n < acc.max_terms; ++n) {
        term *= (a + n) / (b + n) * x / (n + 1);
        sum += term;
        if (term == 0 || stop.done(term, sum)) return sum;
    }
    no_convergence("kummer_1f1");
}

Real series_2f1(Real a, Real b, Real c, Real z, const FunctionAccuracy& acc)
{
    Real term = 1;
    Real sum = 1;
    Termination stop(acc);
    for (int n = 0; n < acc.max_terms; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z;
        sum += term;
        if (term == 0 || stop.done(term, sum)) return sum;
    }
    no_convergence("gauss_2f1");
}

// c - a - b = 0 (A&S 15.3.10).
Real gauss_2f1_log_zero(Real a, Real b, Real w, const FunctionAccuracy& acc)
{
    const Real log_w = std::log(w);
    Real coef = 1;
    Real psi_n1 = digamma_ld(1);
    Real psi_a = digamma_ld(a);
    Real psi_b = digamma_ld(b);
    Real sum = 0;
    Termination stop(acc);
    for (int n = 0; n < acc.max_terms; ++n) {
        const Real term = coef * (2 * psi_n1 - psi_a - psi_b - log_w);
        sum += term;
        if (stop.done(term, sum)) return gamma_ratio({a + b}, {a, b}) * sum;
        coef *= (a + n) * (b + n) / ((n + 1) * (n + 1)) * w;
        psi_n1 += 1 / Real(n + 1);
        psi_a += 1 / (a + n);
        psi_b += 1 / (b + n);
    }
    no_convergence("gauss_2f1");
}

// c = a + b + m, m = 1, 2, ... (A&S 15.3.11).
Real gauss_2f1_log_positive(Real a, Real b, int m, Real w, const FunctionAccuracy& acc)
{
    const Real c = a + b + m;
    Real finite = 0;
    Real coef = 1;
    for (int n = 0; n < m; ++n) {
        finite += coef;
        coef *= (a + n) * (b + n) / ((n + 1) * (1 - m + n)) * w;
    }
    finite *= gamma_ratio({Real(m), c}, {a + m, b + m});

    const Real log_w = std::log(w);
    Real psi_n1 = digamma_ld(1);
    Real psi_nm1 = digamma_ld(m + 1);
    Real psi_a = digamma_ld(a + m);
    Real psi_b = digamma_ld(b + m);
    coef = 1 / std::tgamma(Real(m + 1));
    Real sum = 0;
    Termination stop(acc);
    for (int n = 0; n < acc.max_terms; ++n) {
        const Real term = coef * (log_w - psi_n1 - psi_nm1 + psi_a + psi_b);
        sum += term;
        if (stop.done(term, sum)) {
            const Real sign = (m % 2 == 0) ? 1 : -1;
            return finite - sign * gamma_ratio({c}, {a, b}) * std::pow(w, Real(m)) * sum;
        }
        coef *= (a + m + n) * (b + m + n) / ((n + 1) * Real(n + m + 1)) * w;
        psi_n1 += 1 / Real(n + 1);
        psi_nm1 += 1 / Real(n + m + 1);
        psi_a += 1 / (a + m + n);
        psi_b += 1 / (b + m + n);
    }
    no_convergence("gauss_2f1");
}

// c = a + b - k, k = 1, 2, ... (A&S 15.3.12).
Real gauss_2f1_log_negative(Real a, Real b, int k, Real w, const FunctionAccuracy& acc)
{
    const Real c = a + b - k;
    Real finite = 0;
    Real coef = 1;
    for (int n = 0; n < k; ++n) {
        finite += coef;
        coef *= (a - k + n) * (b - k + n) / ((n + 1) * (1 - k + n)) * w;
    }
    finite *= gamma_ratio({Real(k), c}, {a, b}) * std::pow(w, Real(-k));

    const Real pref = gamma_ratio({c}, {a - k, b - k});
    if (pref == 0) return finite;

    const Real log_w = std::log(w);
    Real psi_n1 = digamma_ld(1);
    Real psi_nk1 = digamma_ld(k + 1);
    Real psi_a = digamma_ld(a);
    Real psi_b = digamma_ld(b);
    coef = 1 / std::tgamma(Real(k + 1));
    Real sum = 0;
    Termination stop(acc);
    for (int n = 0; n < acc.max_terms; ++n) {
        const Real term = coef * (log_w - psi_n1 - psi_nk1 + psi_a + psi_b);
        sum += term;
        if (stop.done(term, sum)) {
            const Real sign = (k % 2 == 0) ? 1 : -1;
            return finite - sign * pref * sum;
        }
        coef *= (a + n) * (b + n) / ((n + 1) * Real(n + k + 1)) * w;
        psi_n1 += 1 / Real(n + 1);
        psi_nk1 += 1 / Real(n + k + 1);
        psi_a += 1 / (a + n);
        psi_b += 1 / (b + n);
    }
    no_convergence("gauss_2f1");
}

Real gauss_2f1_connection(Real a, Real b, Real c, Real z, const FunctionAccuracy& acc)
{
    const Real w = 1 - z;
    const Real m = c - a - b;
    const Real m_round = std::round(m);
    if (std::fabs(m - m_round) < 1e-12L) {
        const int mi = static_cast<int>(m_round);
        if (mi == 0) return gauss_2f1_log_zero(a, b, w, acc);
        if (mi > 0) return gauss_2f1_log_positive(a, b, mi, w, acc);
        return gauss_2f1_log_negative(a, b, -mi, w, acc);
    }
    Real result = 0;
    const Real g1 = gamma_ratio({c, m}, {c - a, c - b});
    if (g1 != 0) result += g1 * series_2f1(a, b, 1 - m, w, acc);
    const Real g2 = gamma_ratio({c, -m}, {a, b});
    if (g2 != 0) result += g2 * std::pow(w, m) * series_2f1(c - a, c - b, 1 + m, w, acc);
    return result;
}

}  // namespace

void FunctionAccuracy::validate() const
{
    if (!(rel_tol > 0 && rel_tol < 1e-6)) domain("FunctionAccuracy: rel_tol must lie in (0, 1e-6)");
    if (max_terms < 100) domain("FunctionAccuracy: max_terms must be at least 100");
}

double ln_gamma(double x)
{
    if (!(x > 0)) domain("ln_gamma: argument must be positive");
    return static_cast<double>(lgamma_pos(x));
}

double log_abs_gamma(double x, int& sign)
{
    if (std::isnan(x)) domain("log_abs_gamma: NaN argument");
    return static_cast<double>(lgamma_signed(x, sign));
}

double reciprocal_gamma(double x)
{
    if (std::isnan(x)) domain("reciprocal_gamma: NaN argument");
    if (is_nonpositive_integer(x)) return 0.0;
    int sign = 1;
    const Real lg = lgamma_signed(x, sign);
    return static_cast<double>(sign * std::exp(-lg));
}

double digamma(double x)
{
    if (std::isnan(x)) domain("digamma: NaN argument");
    return static_cast<double>(digamma_ld(x));
}

double reg_upper_gamma(double a, double x, const FunctionAccuracy& acc)
{
    acc.validate();
    check_gamma_args(a, x);
    return static_cast<double>(reg_upper_gamma_ld(a, x, acc));
}

double reg_lower_gamma(double a, double x, const FunctionAccuracy& acc)
{
    acc.validate();
    check_gamma_args(a, x);
    if (x == 0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (x < a + 1) return static_cast<double>(std::clamp<Real>(lower_gamma_series(a, x, acc), 0, 1));
    return static_cast<double>(std::clamp<Real>(1 - upper_gamma_cf(a, x, acc), 0, 1));
}

double bessel_i_scaled(double nu, double x, const FunctionAccuracy& acc)
{
    acc.validate();
    check_bessel_args(nu, x);
    return static_cast<double>(bessel_i_scaled_ld(nu, x, acc));
}

double bessel_i(double nu, double x, const FunctionAccuracy& acc)
{
    acc.validate();
    check_bessel_args(nu, x);
    const Real scaled = bessel_i_scaled_ld(nu, x, acc);
    if (scaled == 0) return 0.0;
    if (std::log(scaled) + x > std::log(std::numeric_limits<double>::max())) {
        throw std::overflow_error("bessel_i: I_nu(x) exceeds double range; use bessel_i_scaled");
    }
    return static_cast<double>(scaled * std::exp(Real(x)));
}

double marcum_q(double m, double a, double b, const FunctionAccuracy& acc)
{
    acc.validate();
    if (!(m > 0)) domain("marcum_q: order must be positive");
    if (!(a >= 0) || !(b >= 0)) domain("marcum_q: arguments must be nonnegative");
    if (b == 0) return 1.0;
    if (std::isinf(b)) return 0.0;
    const Real x = Real(b) * b / 2;
    if (a == 0) return static_cast<double>(reg_upper_gamma_ld(m, x, acc));

    // Poisson weights are negligible below mu - 9 sqrt(mu); start there.
    const Real mu = Real(a) * a / 2;
    const long k0 = mu > 100 ? static_cast<long>(std::floor(mu - 9 * std::sqrt(mu))) : 0;
    const Real log_mu = std::log(mu);
    const Real log_x = std::log(x);

    Real q = reg_upper_gamma_ld(m + k0, x, acc);
    Real log_w = -mu + k0 * log_mu - lgamma_pos(Real(k0) + 1);
    Real log_step = (m + k0) * log_x - x - lgamma_pos(m + k0 + 1);

    // q <= 1, so the remaining tail is bounded by a geometric series of the
    // Poisson weights once k exceeds the Poisson mean.
    const Real tol = std::min<Real>(acc.rel_tol, 1e-17L);
    Real sum = 0;
    for (long k = k0; k < k0 + acc.max_terms; ++k) {
        const Real weight = std::exp(log_w);
        sum += weight * q;
        const Real ratio = mu / (k + 1);
        if (ratio < 1 && weight * ratio / (1 - ratio) <= tol * sum) {
            return static_cast<double>(std::clamp<Real>(sum, 0, 1));
        }
        q = std::min<Real>(1, q + std::exp(log_step));
        log_w += log_mu - std::log(Real(k + 1));
        log_step += log_x - std::log(m + k + 1);
    }
    no_convergence("marcum_q");
}

double kummer_1f1(double a, double b, double x, const FunctionAccuracy& acc)
{
    acc.validate();
    if (is_nonpositive_integer(b)) domain("kummer_1f1: b must not be a nonpositive integer");
    if (x == 0) return 1.0;
    if (x > 0 || is_nonpositive_integer(a)) return to_double(series_1f1(a, b, x, acc), "kummer_1f1");
    const Real value = std::exp(Real(x)) * series_1f1(Real(b) - a, b, -Real(x), acc);
    return to_double(value, "kummer_1f1");
}

double kummer_1f1_regularized(double a, double b, double x, const FunctionAccuracy& acc)
{
    acc.validate();
    if (!is_nonpositive_integer(b)) return kummer_1f1(a, b, x, acc) * reciprocal_gamma(b);
    // lim_{b -> -n} 1F1(a; b; x)/Gamma(b) = (a)_{n+1} x^{n+1}/(n+1)! 1F1(a+n+1; n+2; x)
    const int n = static_cast<int>(-b);
    if (x == 0) return 0.0;
    const Real lead = Real(pochhammer(a, n + 1)) * std::pow(Real(x), Real(n + 1)) / std::tgamma(Real(n + 2));
    return to_double(lead * kummer_1f1(a + n + 1, n + 2, x, acc), "kummer_1f1_regularized");
}

double gauss_2f1(double a, double b, double c, double z, const FunctionAccuracy& acc)
{
    acc.validate();
    if (!(z >= 0 && z < 1)) domain("gauss_2f1: z must lie in [0, 1)");
    if (is_nonpositive_integer(c)) domain("gauss_2f1: c must not be a nonpositive integer");
    if (z == 0) return 1.0;
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b) || z <= 0.5) {
        return to_double(series_2f1(a, b, c, z, acc), "gauss_2f1");
    }
    return to_double(gauss_2f1_connection(a, b, c, z, acc), "gauss_2f1");
}

double laguerre(int n, double alpha, double x)
{
    if (n < 0) domain("laguerre: degree must be nonnegative");
    Real prev = 1;
    if (n == 0) return 1.0;
    Real curr = 1 + Real(alpha) - x;
    for (int k = 1; k < n; ++k) {
        const Real next = ((2 * k + 1 + Real(alpha) - x) * curr - (k + Real(alpha)) * prev) / (k + 1);
        prev = curr;
        curr = next;
    }
    return to_double(curr, "laguerre");
}

double pochhammer(double a, int n)
{
    if (std::isnan(a)) domain("pochhammer: NaN argument");
    constexpr int kProductLimit = 500;
    if (n == 0) return 1.0;
    if (n > 0) {
        if (n <= kProductLimit || (is_nonpositive_integer(a) && a + n - 1 >= 0)) {
            Real p = 1;
            for (int j = 0; j < n; ++j) p *= Real(a) + j;
            return to_double(p, "pochhammer");
        }
        int s1 = 1;
        int s2 = 1;
        Real lg = 0;
        if (is_nonpositive_integer(a)) {
            // (a)_n = (-1)^n Gamma(1 - a) / Gamma(1 - a - n)
            lg = lgamma_signed(1 - Real(a), s1) - lgamma_signed(1 - Real(a) - n, s2);
            return to_double(((n % 2 == 0) ? 1 : -1) * s1 * s2 * std::exp(lg), "pochhammer");
        }
        lg = lgamma_signed(Real(a) + n, s1) - lgamma_signed(a, s2);
        return to_double(s1 * s2 * std::exp(lg), "pochhammer");
    }
    const int k = -n;
    if (is_integer(a) && a >= 1 && a <= k) {
        domain("pochhammer: (a)_n undefined, Gamma(a + n) is a pole while Gamma(a) is finite");
    }
    if (k <= kProductLimit) {
        Real p = 1;
        for (int j = 1; j <= k; ++j) p *= Real(a) - j;
        return to_double(1 / p, "pochhammer");
    }
    if (is_nonpositive_integer(a)) {
        // (a)_{-k} = 1 / ((a-1)...(a-k)) with every factor negative.
        Real lg = lgamma_pos(Real(k) - a + 1) - lgamma_pos(1 - Real(a));
        return to_double(((k % 2 == 0) ? 1 : -1) * std::exp(-lg), "pochhammer");
    }
    int s1 = 1;
    int s2 = 1;
    const Real lg = lgamma_signed(Real(a) - k, s1) - lgamma_signed(a, s2);
    return to_double(s1 * s2 * std::exp(lg), "pochhammer");
}

double binomial(double top, int k)
{
    if (std::isnan(top)) domain("binomial: NaN argument");
    if (k < 0) domain("binomial: k must be nonnegative");
    if (k == 0) return 1.0;
    if (is_integer(top) && top >= 0 && k > top) return 0.0;
    if (k <= 500) {
        Real p = 1;
        for (int j = 0; j < k; ++j) p *= (Real(top) - j) / (j + 1);
        return to_double(p, "binomial");
    }
    if (is_nonpositive_integer(top + 1)) {
        // binom(-n, k) = (-1)^k binom(n + k - 1, k)
        return ((k % 2 == 0) ? 1.0 : -1.0) * binomial(k - top - 1, k);
    }
    int s1 = 1;
    int s2 = 1;
    const Real lg = lgamma_signed(Real(top) + 1, s1) - lgamma_pos(Real(k) + 1) - lgamma_signed(Real(top) - k + 1, s2);
    return to_double(s1 * s2 * std::exp(lg), "binomial");
}

}  // namespace edsense::specfun
