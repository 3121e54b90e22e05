#pragma once

#include <vector>

namespace hsf {

// Zero-field hydrogen quantum numbers.  Valid when n >= 1, 0 <= l <= n-1,
// |m| <= l; the radial node count is n_r = n - l - 1.
struct HydrogenLabel {
    int n;
    int l;
    int m;
};

// Strong-field quantum numbers: transverse radial n_rho, longitudinal node
// count n_z, and m (conserved by the adiabatic evolution).
struct StrongFieldLabel {
    int n_rho;
    int n_z;
    int m;
};

// Node-conserving adiabatic map: n_rho = n - l - 1, n_z = l - |m|, m fixed.
StrongFieldLabel hydrogen_to_strong(const HydrogenLabel& h);

// Exact inverse: l = n_z + |m|, n = n_rho + l + 1, m fixed.
HydrogenLabel strong_to_hydrogen(const StrongFieldLabel& s);

// Hydrogen ancestors of the lowest strong-field sublevel family
// (n_rho = 0, n_z = 0, m = 0, -1, -2, ...), in decreasing m:
// 1s; 2p, m=-1; 3d, m=-2; and so on — the pattern (q+1, q, -q).
std::vector<HydrogenLabel> ground_ancestors(int count);

}  // namespace hsf
