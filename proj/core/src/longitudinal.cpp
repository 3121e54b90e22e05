#include "hsf/longitudinal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsf/errors.hpp"
#include "hsf/specfun.hpp"

namespace hsf {

namespace {

bool near_positive_integer(double nu) {
    const double r = std::round(nu);
    return r >= 1.0 && std::fabs(nu - r) < kPoleEps;
}

// Above this z the direct series for u_plus cancels away its accuracy
// (terms grow like e^z while the value decays like z^nu e^(-z/2)).
double u_plus_series_limit(double nu) { return std::max(20.0, 6.0 * nu + 14.0); }

// Same function through its decaying large-z representation,
//   u = Gamma(1-nu) e^(-z/2) z^nu sum_s (1-nu)_s (-nu)_s / (s! (-z)^s),
// summed to the smallest term (optimal truncation of the asymptotic tail).
double u_plus_asymptotic(double nu, double z, const SeriesControl& ctrl) {
    double sum = 1.0;
    double term = 1.0;
    for (int s = 0; s < ctrl.max_terms; ++s) {
        const double next = term * (1.0 - nu + s) * (-nu + s) / ((s + 1.0) * (-z));
        if (std::fabs(next) >= std::fabs(term)) break;
        term = next;
        sum += term;
        if (std::fabs(term) <= ctrl.rel_tol * std::fabs(sum)) break;
    }
    return std::tgamma(1.0 - nu) * std::exp(-0.5 * z) * std::pow(z, nu) * sum;
}

}  // namespace

double nu_to_energy(double nu) {
    if (!std::isfinite(nu) || nu <= 0.0)
        throw invalid_input("nu_to_energy: nu must be positive, got " + std::to_string(nu));
    return -0.5 / (nu * nu);
}

double energy_to_nu(double energy_hartree) {
    if (!std::isfinite(energy_hartree) || energy_hartree >= 0.0)
        throw invalid_input("energy_to_nu: bound states need e < 0, got " +
                            std::to_string(energy_hartree));
    return 1.0 / std::sqrt(-2.0 * energy_hartree);
}

double u_minus(int n, double z, const SeriesControl& ctrl) {
    if (n < 1) throw invalid_input("u_minus: n must be >= 1");
    if (z < 0.0) return -u_minus(n, -z, ctrl);
    return std::exp(-0.5 * z) * z * kummer_f(1.0 - n, 2.0, z, ctrl);
}

double u_plus(double nu, double z, const SeriesControl& ctrl) {
    if (!std::isfinite(z) || z <= 0.0 || z > 100.0)
        throw invalid_input("u_plus: z must lie in (0, 100], got " + std::to_string(z));
    if (!std::isfinite(nu) || nu <= 0.0)
        throw invalid_input("u_plus: nu must be positive, got " + std::to_string(nu));
    if (near_positive_integer(nu))
        throw pole_error("u_plus: coefficient pole at integer nu = " + std::to_string(nu));

    if (z > u_plus_series_limit(nu)) return u_plus_asymptotic(nu, z, ctrl);

    const double f = kummer_f(1.0 - nu, 2.0, z, ctrl);

    double s = 0.0;
    double zk = 1.0;
    int small_streak = 0;
    bool converged = false;
    for (int k = 0; k < ctrl.max_terms; ++k) {
        const double t = even_series_coefficient(nu, k) * zk;
        s += t;
        if (std::fabs(t) <= ctrl.rel_tol * std::fabs(s)) {
            if (++small_streak >= 2) {
                converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
        zk *= z;
    }
    if (!converged)
        throw truncation_error("u_plus: coefficient series did not converge within " +
                                   std::to_string(ctrl.max_terms) + " terms",
                               s, ctrl.max_terms);

    return std::exp(-0.5 * z) * (1.0 - nu * z * (std::log(z) * f + s));
}

double eigen_equation_residual(double nu, double lambda) {
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw invalid_input("eigen_equation_residual: lambda must be positive");
    if (!std::isfinite(nu) || nu <= 0.0)
        throw invalid_input("eigen_equation_residual: nu must be positive");
    if (near_positive_integer(nu))
        throw pole_error("eigen_equation_residual: psi(1-nu) pole at integer nu = " +
                         std::to_string(nu));
    return 0.5 / nu + digamma(1.0 - nu) - lambda;
}

double asymptotic_nu(int k, double lambda) {
    if (k < 0) throw invalid_input("asymptotic_nu: k must be >= 0");
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw invalid_input("asymptotic_nu: lambda must be positive");
    return k == 0 ? 0.5 / lambda : k + 1.0 / lambda;
}

LongitudinalLevel solve_even_nu(int k, double lambda, double tol) {
    if (k < 0) throw invalid_input("solve_even_nu: k must be >= 0");
    if (!std::isfinite(lambda)) throw invalid_input("solve_even_nu: lambda must be finite");
    if (lambda < 1.0)
        throw regime_error("solve_even_nu: lambda = " + std::to_string(lambda) +
                           " is below 1, outside the logarithmic strong-field regime");
    if (!std::isfinite(tol) || tol < 1e-13)
        throw invalid_input("solve_even_nu: tol must be >= 1e-13");

    // residual runs from +inf (1/(2 nu) at k = 0, psi pole otherwise) down
    // to -inf across the bracket, so the sign check is a hard guarantee
    const double inset = 1e-8;
    double lo = k + inset;
    double hi = k + 1.0 - inset;
    if (!(eigen_equation_residual(lo, lambda) > 0.0) ||
        !(eigen_equation_residual(hi, lambda) < 0.0))
        throw solver_error("solve_even_nu: bracket (" + std::to_string(lo) + ", " +
                           std::to_string(hi) + ") lost its sign change at lambda = " +
                           std::to_string(lambda));

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // below double resolution
        (eigen_equation_residual(mid, lambda) > 0.0 ? lo : hi) = mid;
    }
    const double nu = 0.5 * (lo + hi);
    return {Parity::even, k, nu, nu_to_energy(nu)};
}

LongitudinalLevel solve_odd_nu(int n) {
    if (n < 1) throw invalid_input("solve_odd_nu: the odd spectrum starts at n = 1");
    return {Parity::odd, n, static_cast<double>(n), nu_to_energy(n)};
}

int count_nodes(const LongitudinalLevel& level, double z_max, int samples,
                const SeriesControl& ctrl) {
    if (!(z_max > 0.0) || z_max < 4.0 * level.nu * (level.k + 2))
        throw invalid_input(
            "count_nodes: z_max must cover the classically allowed region, need >= 4 nu (k+2)");
    if (samples < 2000) throw invalid_input("count_nodes: samples must be >= 2000");

    const auto eval = [&](double z) {
        if (level.parity == Parity::odd) return u_minus(level.k, z, ctrl);
        return u_plus(level.nu, std::fabs(z), ctrl);  // even extension
    };

    // midpoint grid with an even point count, so z = 0 is never sampled and
    // the odd-state origin crossing is caught between the two middle points
    const int ns = samples + (samples & 1);
    const double h = 2.0 * z_max / ns;

    // bisection-confirm a crossing; a stretch where |u| never rises above
    // 1e-12 cannot be classified as a genuine zero crossing
    const auto refine = [&](double a, double b, double va, double vb) {
        double peak = std::max(std::fabs(va), std::fabs(vb));
        for (int it = 0; it < 80 && b - a > 1e-14 * std::max(1.0, std::fabs(a)); ++it) {
            const double m = 0.5 * (a + b);
            const double vm = eval(m);
            peak = std::max(peak, std::fabs(vm));
            if ((vm > 0.0) == (va > 0.0)) {
                a = m;
                va = vm;
            } else {
                b = m;
                vb = vm;
            }
        }
        if (peak < 1e-12)
            throw degenerate_sampling_error("count_nodes: crossing near z = " +
                                            std::to_string(0.5 * (a + b)) +
                                            " is too shallow to classify");
    };

    int count = 0;
    double z_prev = -z_max + 0.5 * h;
    double v_prev = eval(z_prev);
    int s_prev = (v_prev > 0.0) - (v_prev < 0.0);
    for (int j = 1; j < ns; ++j) {
        const double z = -z_max + (j + 0.5) * h;
        const double v = eval(z);
        const int s = (v > 0.0) - (v < 0.0);
        if (s == 0) {
            // grid point exactly on a (simple) zero: count it once and flip
            // the carried sign so the flank does not count again
            ++count;
            s_prev = -s_prev;
            z_prev = z;
            continue;
        }
        if (s_prev != 0 && s != s_prev) {
            refine(z_prev, z, v_prev, v);
            ++count;
        }
        z_prev = z;
        v_prev = v;
        s_prev = s;
    }
    return count;
}

}  // namespace hsf
