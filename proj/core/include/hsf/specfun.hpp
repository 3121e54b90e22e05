#pragma once

namespace hsf {

// Truncation control for the hypergeometric-type series.  The defaults are
// sized for the z <= 100 range the longitudinal solutions actually use.
struct SeriesControl {
    double rel_tol = 1e-14;
    int max_terms = 400;
};

// Arguments within this distance of a non-positive integer count as sitting
// on a pole.  Root brackets downstream are inset 1e-8 from the integers,
// one decade outside this guard, so the two never disagree.
inline constexpr double kPoleEps = 1e-9;

// psi(x) = Gamma'(x)/Gamma(x).  Absolute error <= 1e-12 for |x| <= 100.
// Upward recurrence psi(x) = psi(x+1) - 1/x until x >= 8, then the
// Bernoulli asymptotic series; negative arguments take the same recurrence
// path from below, no reflection formula involved.
double digamma(double x);

// Kummer's confluent hypergeometric F(a,b;z) = sum_k (a)_k/(b)_k z^k/k!.
// Terminates exactly when a is a non-positive integer (polynomial case);
// otherwise the series is truncated once the running term drops below
// ctrl.rel_tol relative to the partial sum.
double kummer_f(double a, double b, double z, const SeriesControl& ctrl = {});

// k-th coefficient of the logarithm-free sum in the even longitudinal
// solution:
//   (1-nu)_k [psi(1-nu+k) - psi(k+2) - psi(k+1)] / (k! (k+1)!)
// The Pochhammer-over-factorials prefactor is accumulated as one finite
// product of (1-nu+j)/((j+1)(j+2)) factors, so no Gamma quotient is ever
// formed and nothing here can overflow.
double even_series_coefficient(double nu, int k);

}  // namespace hsf
