#pragma once

#include "hsf/specfun.hpp"

namespace hsf {

enum class Parity { even, odd };

// One bound state of the one-dimensional Coulomb motion along the field
// axis.  Odd levels sit exactly at integer nu = k (k >= 1); even level k
// has its nu inside the open interval (k, k+1), with (0, 1) for the k = 0
// singlet.  energy_hartree = -1/(2 nu^2).
struct LongitudinalLevel {
    Parity parity;
    int k;
    double nu;
    double energy_hartree;
};

// E = -1/(2 nu^2) hartree.
double nu_to_energy(double nu);

// nu = 1/sqrt(-2E); exact inverse of nu_to_energy.
double energy_to_nu(double energy_hartree);

// Odd solution u_n^-(z) = e^(-z/2) z F(1-n, 2; z) for z >= 0, extended
// oddly to z < 0.  The series terminates, so any real z is fine.
double u_minus(int n, double z, const SeriesControl& ctrl = {});

// Even solution for 0 < z <= 100:
//   u_nu^+(z) = e^(-z/2) { 1 - nu z (ln z F(1-nu,2;z) + sum_k c_k z^k) }
// with c_k from even_series_coefficient.  The even extension
// u(-z) = u(z) is the caller's convention.  Past z ~ 30 the series
// cancels catastrophically, so the same function is evaluated there
// through its decaying large-z representation.
double u_plus(double nu, double z, const SeriesControl& ctrl = {});

// f(nu) = 1/(2 nu) + psi(1 - nu) - lambda.  Strictly decreasing between
// consecutive integer poles of psi(1-nu), so each branch (k, k+1) holds
// exactly one root.
double eigen_equation_residual(double nu, double lambda);

// Large-lambda root estimates: 1/(2 lambda) for k = 0, k + 1/lambda for
// k >= 1.  Solver seeds and diagnostics only; meaningless for lambda ~ 1.
double asymptotic_nu(int k, double lambda);

// Root of the eigenvalue equation on ((k, k+1), or (0,1) for k = 0) by
// bisection to |dnu| <= tol, brackets inset 1e-8 from the integers.
// Requires lambda >= 1; below that the equation itself is meaningless.
LongitudinalLevel solve_even_nu(int k, double lambda, double tol = 1e-12);

// Odd levels need no solving: nu = n exactly.
LongitudinalLevel solve_odd_nu(int n);

// Number of sign changes of the full-axis wavefunction on (-z_max, z_max),
// each confirmed by bisection refinement.  The origin zero of odd states
// counts once.  Requires z_max >= 4 nu (k+2) and samples >= 2000.
int count_nodes(const LongitudinalLevel& level, double z_max, int samples,
                const SeriesControl& ctrl = {});

}  // namespace hsf
