#pragma once

#include "hsf/longitudinal.hpp"

namespace hsf {

// Inward-shooting configuration.  Lengths in Bohr radii, energies in
// hartree.  Invariants: 0 < z_cut_bohr < 1, z_far_bohr > z_cut_bohr and
// large enough to cover the exponential tail (>= 40 nu for the state
// sought), step_bohr <= z_cut_bohr/10.
struct ShootingConfig {
    double z_cut_bohr;
    double z_far_bohr;
    double step_bohr;
    double e_tol = 1e-9;
};

// Builds a config consistent with the invariants above.  For odd levels
// the cutoff is a small step-limited value (the match extrapolates to the
// origin); for even levels it is the magnetic length a_H = e^(-lambda),
// which requires lambda in [1, 12] — beyond that the cutoff underflows any
// affordable step and the analytic path is authoritative anyway.  lambda
// is ignored for odd levels.
ShootingConfig default_shooting_config(Parity parity, int k, double lambda);

struct ShotResult {
    double u_at_cut;
    double du_at_cut;
    int node_count;
};

// Integrates -1/2 u'' - u/z = e u from z_far down to z_cut with classical
// fixed-step RK4, seeded from the decaying tail u ~ z^(1/kappa) e^(-kappa z),
// kappa = sqrt(-2e).  Inward is the stable direction for this solution.
// Only ratios of the returned values are meaningful; the state rescales
// internally when |u| grows past 1e250.  node_count is the number of sign
// changes encountered in (z_cut, z_far).
ShotResult integrate_inward(double e, const ShootingConfig& cfg);

// Bound-state search by energy bisection on the matching function:
//   odd  — u extrapolated to the origin (second-order Taylor from z_cut,
//          using the wave equation for u''), a Dirichlet condition there;
//   even — du/dz = 0 at the cutoff transcribed into the dimensionless
//          variable of the longitudinal equation, z_match = nu(e) z_cut/2.
// The energy bracket is seeded from the analytic prediction +-50% in nu;
// candidate roots are gated by node count (k nodes on z > 0 for even level
// k, k-1 interior nodes for odd level k).
LongitudinalLevel ode_eigenvalue(Parity parity, int k, const ShootingConfig& cfg);

// The lambda the analytic eigenvalue equation assigns to nu:
// 1/(2 nu) + psi(1 - nu).  Oracle-vs-analytic comparisons are phrased as
// |lambda_effective(nu_ODE) - lambda| since the cutoff fixes lambda only
// up to an O(1) constant inside the logarithm.
double lambda_effective(double nu);

}  // namespace hsf
