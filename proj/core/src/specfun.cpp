#include "hsf/specfun.hpp"

#include <cmath>
#include <string>

#include "hsf/errors.hpp"

namespace hsf {

namespace {

bool near_nonpositive_integer(double x) {
    if (x > 0.5) return false;
    const double r = std::round(x);
    return r <= 0.0 && std::fabs(x - r) < kPoleEps;
}

void check_ctrl(const SeriesControl& ctrl) {
    if (!(ctrl.rel_tol > 0.0) || ctrl.rel_tol > 1e-6)
        throw invalid_input("SeriesControl: rel_tol must lie in (0, 1e-6]");
    if (ctrl.max_terms < 50)
        throw invalid_input("SeriesControl: max_terms must be >= 50");
}

}  // namespace

double digamma(double x) {
    if (!std::isfinite(x)) throw invalid_input("digamma: argument must be finite");
    if (near_nonpositive_integer(x))
        throw pole_error("digamma: pole at non-positive integer, x = " + std::to_string(x));

    // shift into the asymptotic region, psi(x) = psi(x+1) - 1/x
    double acc = 0.0;
    while (x < 8.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) ~ ln x - 1/(2x) - sum_n B_{2n}/(2n x^{2n}), kept through B_14;
    // at x >= 8 the first omitted term is below 1e-15
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double tail =
        -1.0 / 12.0 +
        inv2 * (1.0 / 120.0 +
                inv2 * (-1.0 / 252.0 +
                        inv2 * (1.0 / 240.0 +
                                inv2 * (-1.0 / 132.0 +
                                        inv2 * (691.0 / 32760.0 + inv2 * (-1.0 / 12.0))))));
    return acc + std::log(x) - 0.5 * inv + inv2 * tail;
}

double kummer_f(double a, double b, double z, const SeriesControl& ctrl) {
    check_ctrl(ctrl);
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z))
        throw invalid_input("kummer_f: arguments must be finite");
    if (near_nonpositive_integer(b))
        throw invalid_input("kummer_f: b = " + std::to_string(b) +
                            " is a non-positive integer, the series is undefined");

    // a at a non-positive integer makes the series a polynomial of degree -a
    long terminal = -1;
    if (near_nonpositive_integer(a)) terminal = static_cast<long>(-std::round(a)) + 1;

    double sum = 1.0;
    double term = 1.0;
    int small_streak = 0;
    for (int k = 0; k < ctrl.max_terms; ++k) {
        if (terminal >= 0 && k + 1 >= terminal) return sum;
        term *= (a + k) / ((b + k) * (k + 1.0)) * z;
        sum += term;
        if (std::fabs(term) <= ctrl.rel_tol * std::fabs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw truncation_error("kummer_f: series did not converge within " +
                               std::to_string(ctrl.max_terms) + " terms",
                           sum, ctrl.max_terms);
}

double even_series_coefficient(double nu, int k) {
    if (k < 0) throw invalid_input("even_series_coefficient: k must be >= 0");
    if (!std::isfinite(nu)) throw invalid_input("even_series_coefficient: nu must be finite");
    const double r = std::round(nu);
    if (r >= 1.0 && std::fabs(nu - r) < kPoleEps)
        throw pole_error("even_series_coefficient: pole at integer nu = " + std::to_string(nu));

    // (1-nu)_k / (k! (k+1)!) as a single finite product; every Pochhammer
    // factor is paired with (j+1)(j+2), so the magnitude only shrinks
    double prefactor = 1.0;
    for (int j = 0; j < k; ++j) prefactor *= (1.0 - nu + j) / ((j + 1.0) * (j + 2.0));

    const double bracket = digamma(1.0 - nu + k) - digamma(k + 2.0) - digamma(k + 1.0);
    return prefactor * bracket;
}

}  // namespace hsf
