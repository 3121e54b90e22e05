#include "hsf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "hsf/errors.hpp"
#include "hsf/specfun.hpp"

namespace hsf {

namespace {

constexpr double kRescaleLimit = 1e250;

void check_config(const ShootingConfig& cfg) {
    if (!(cfg.z_cut_bohr > 0.0) || !(cfg.z_cut_bohr < 1.0))
        throw config_error("shooting config: z_cut_bohr must lie in (0, 1)");
    if (!(cfg.z_far_bohr > cfg.z_cut_bohr))
        throw config_error("shooting config: z_far_bohr must exceed z_cut_bohr");
    if (!(cfg.step_bohr > 0.0) || cfg.step_bohr > cfg.z_cut_bohr / 10.0)
        throw config_error("shooting config: step_bohr must be positive and <= z_cut_bohr/10");
    if (!(cfg.e_tol > 0.0)) throw config_error("shooting config: e_tol must be positive");
}

}  // namespace

ShootingConfig default_shooting_config(Parity parity, int k, double lambda) {
    if (parity == Parity::odd) {
        if (k < 1) throw invalid_input("default_shooting_config: odd levels start at k = 1");
        const double z_cut = 2e-3;
        return {z_cut, std::max(40.0 * k, 20.0), std::min(z_cut / 20.0, 1e-3), 1e-9};
    }
    if (k < 0) throw invalid_input("default_shooting_config: k must be >= 0");
    if (!std::isfinite(lambda) || lambda < 1.0 || lambda > 12.0)
        throw invalid_input(
            "default_shooting_config: even-state oracle runs cover lambda in [1, 12]; beyond "
            "that the cutoff underflows any affordable step and the analytic path is "
            "authoritative");
    const double z_cut = std::exp(-lambda);  // a_H in Bohr radii
    // the energy sweep reaches down to nu/2, where the scaled matching
    // point nu z_cut/2 is smallest; the step has to resolve that one.
    // sized from the solved root, the same seed ode_eigenvalue uses
    const double nu_hat = solve_even_nu(k, lambda, 1e-12).nu;
    const double z_match_min = 0.25 * nu_hat * z_cut;
    const double step = std::min(z_match_min / 20.0, 1e-3);
    // even roots never exceed k+1, so 40 (k+1) covers any tail the sweep
    // can produce; for the singlet the root stays below its seed
    const double z_far = k == 0 ? 40.0 * nu_hat : 40.0 * (k + 1);
    return {z_cut, z_far, step, 1e-9};
}

ShotResult integrate_inward(double e, const ShootingConfig& cfg) {
    if (!std::isfinite(e) || e >= 0.0)
        throw invalid_input("integrate_inward: bound states need e < 0, got " +
                            std::to_string(e));
    check_config(cfg);

    const double kappa = std::sqrt(-2.0 * e);
    double u = 1.0;
    double du = 1.0 / (kappa * cfg.z_far_bohr) - kappa;  // (ln u)' of z^(1/kappa) e^(-kappa z)

    const long nsteps =
        static_cast<long>(std::ceil((cfg.z_far_bohr - cfg.z_cut_bohr) / cfg.step_bohr));
    const double h = (cfg.z_far_bohr - cfg.z_cut_bohr) / static_cast<double>(nsteps);
    const double s = -h;  // inward

    int nodes = 0;
    double z = cfg.z_far_bohr;
    for (long i = 0; i < nsteps; ++i) {
        // classical RK4 on (u, u'), with u'' = -2 (e + 1/z) u
        const double zm = z - 0.5 * h;
        const double z1 = cfg.z_far_bohr - static_cast<double>(i + 1) * h;
        const double k1u = du;
        const double k1d = -2.0 * (e + 1.0 / z) * u;
        const double k2u = du + 0.5 * s * k1d;
        const double k2d = -2.0 * (e + 1.0 / zm) * (u + 0.5 * s * k1u);
        const double k3u = du + 0.5 * s * k2d;
        const double k3d = -2.0 * (e + 1.0 / zm) * (u + 0.5 * s * k2u);
        const double k4u = du + s * k3d;
        const double k4d = -2.0 * (e + 1.0 / z1) * (u + s * k3u);
        const double u_next = u + s / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        du += s / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        if (u_next * u < 0.0) ++nodes;
        u = u_next;
        z = z1;
        const double mag = std::fabs(u);
        if (mag > kRescaleLimit) {  // only ratios matter
            u /= mag;
            du /= mag;
        }
    }
    return {u, du, nodes};
}

LongitudinalLevel ode_eigenvalue(Parity parity, int k, const ShootingConfig& cfg) {
    check_config(cfg);

    double nu_seed;
    if (parity == Parity::odd) {
        if (k < 1) throw invalid_input("ode_eigenvalue: odd levels start at k = 1");
        nu_seed = k;
    } else {
        if (k < 0) throw invalid_input("ode_eigenvalue: k must be >= 0");
        // the cutoff is the magnetic length, so lambda = -ln z_cut; the
        // analytic root seeds the bracket
        const double lambda = -std::log(cfg.z_cut_bohr);
        nu_seed = solve_even_nu(k, lambda, 1e-12).nu;
    }
    if (cfg.z_far_bohr < 40.0 * nu_seed)
        throw config_error("shooting config: z_far_bohr = " + std::to_string(cfg.z_far_bohr) +
                           " does not cover the tail, need >= 40 nu = " +
                           std::to_string(40.0 * nu_seed));

    const int target_nodes = parity == Parity::odd ? k - 1 : k;

    // matching function and node count at trial energy e
    const auto match = [&](double e) -> std::pair<double, int> {
        if (parity == Parity::odd) {
            const ShotResult r = integrate_inward(e, cfg);
            // second-order Taylor extrapolation of u onto the origin, with
            // the wave equation supplying u'' at the cutoff
            const double upp = -2.0 * (e + 1.0 / cfg.z_cut_bohr) * r.u_at_cut;
            const double m = r.u_at_cut - cfg.z_cut_bohr * r.du_at_cut +
                             0.5 * cfg.z_cut_bohr * cfg.z_cut_bohr * upp;
            return {m, r.node_count};
        }
        // even: Neumann match at the cutoff transcribed into the
        // dimensionless variable of the longitudinal equation
        ShootingConfig trial = cfg;
        trial.z_cut_bohr = 0.5 * energy_to_nu(e) * cfg.z_cut_bohr;
        if (trial.step_bohr > trial.z_cut_bohr / 10.0)
            throw config_error(
                "shooting config: step_bohr too coarse for the even matching point at z = " +
                std::to_string(trial.z_cut_bohr));
        const ShotResult r = integrate_inward(e, trial);
        return {r.du_at_cut, r.node_count};
    };

    // sweep the +-50% nu bracket, then bisect each sign change in energy and
    // keep the root whose node count matches the requested level
    const int sweep = 33;
    const double nu_lo = 0.5 * nu_seed;
    const double nu_hi = 1.5 * nu_seed;
    std::vector<double> e_grid(sweep), m_grid(sweep);
    for (int i = 0; i < sweep; ++i) {
        const double nu = nu_lo + (nu_hi - nu_lo) * i / (sweep - 1);
        e_grid[i] = nu_to_energy(nu);
        m_grid[i] = match(e_grid[i]).first;
    }

    bool any_sign_change = false;
    for (int i = 0; i + 1 < sweep; ++i) {
        if (!(m_grid[i] * m_grid[i + 1] < 0.0)) continue;
        any_sign_change = true;

        double e_lo = e_grid[i];
        double e_hi = e_grid[i + 1];
        double m_lo = m_grid[i];
        while (e_hi - e_lo > cfg.e_tol) {
            const double e_mid = 0.5 * (e_lo + e_hi);
            if (e_mid <= e_lo || e_mid >= e_hi) break;
            const double m_mid = match(e_mid).first;
            if ((m_mid > 0.0) == (m_lo > 0.0)) {
                e_lo = e_mid;
                m_lo = m_mid;
            } else {
                e_hi = e_mid;
            }
        }
        const double e_root = 0.5 * (e_lo + e_hi);
        const auto [m_root, nodes] = match(e_root);
        if (nodes == target_nodes)
            return {parity, k, energy_to_nu(e_root), e_root};
    }

    if (!any_sign_change)
        throw bracket_error(
            "ode_eigenvalue: the matching function has no sign change inside the seeded "
            "energy bracket");
    throw ordering_error(
        "ode_eigenvalue: converged roots all have node counts different from the requested "
        "level");
}

double lambda_effective(double nu) {
    if (!std::isfinite(nu) || nu <= 0.0)
        throw invalid_input("lambda_effective: nu must be positive");
    const double r = std::round(nu);
    if (r >= 1.0 && std::fabs(nu - r) < kPoleEps)
        throw pole_error("lambda_effective: psi(1-nu) pole at integer nu = " +
                         std::to_string(nu));
    return 0.5 / nu + digamma(1.0 - nu);
}

}  // namespace hsf
