#include "hsf/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "hsf/errors.hpp"

namespace hsf {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

std::string label_text(const LandauLabel& l) {
    return "(n_rho=" + std::to_string(l.n_rho) + ", m=" + std::to_string(l.m) +
           ", N=" + std::to_string(l.n_landau) + ")";
}

}  // namespace

int landau_index(int n_rho, int m) {
    if (n_rho < 0) throw invalid_input("landau_index: n_rho must be >= 0");
    return n_rho + (m > 0 ? m : 0);  // n_rho + (m + |m|)/2
}

LandauLabel make_landau_label(int n_rho, int m) { return {n_rho, m, landau_index(n_rho, m)}; }

double landau_energy(const FieldParams& params, int n_landau) {
    if (n_landau < 0) throw invalid_input("landau_energy: n_landau must be >= 0");
    return params.gamma * (n_landau + 0.5);
}

const char* to_string(Validity v) {
    switch (v) {
        case Validity::valid: return "valid";
        case Validity::marginal: return "marginal";
        default: return "invalid";
    }
}

ValidityReport validity_check(const FieldParams& params, int n_landau,
                              const ValidityThresholds& t) {
    const double lam = params.lambda;
    if (lam < t.lambda_invalid)
        return {Validity::invalid, "lambda = " + num(lam) + " is below " + num(t.lambda_invalid) +
                                       ", the logarithmic approximation does not apply"};
    if (lam < t.lambda_marginal)
        return {Validity::marginal, "lambda = " + num(lam) + " is below " +
                                        num(t.lambda_marginal) +
                                        ", logarithmic accuracy is poor"};
    const double headroom = lam - std::log(static_cast<double>(std::max(n_landau, 1)));
    if (headroom < t.log_n_margin)
        return {Validity::marginal, "lambda - ln N = " + num(headroom) + " is below " +
                                        num(t.log_n_margin) +
                                        ", the orbit radius approaches the Bohr radius"};
    return {Validity::valid, "lambda = " + num(lam) + " with lambda - ln N = " + num(headroom)};
}

std::vector<SpectrumLine> assemble(const FieldParams& params,
                                   const std::vector<LandauLabel>& labels, int k_max,
                                   double tol) {
    if (k_max < 0) throw invalid_input("assemble: k_max must be >= 0");
    if (labels.empty()) return {};

    for (const auto& label : labels) {
        const auto v = validity_check(params, label.n_landau);
        if (v.verdict == Validity::invalid)
            throw regime_error("assemble: label " + label_text(label) + ": " + v.reason);
    }

    // the longitudinal ladder is field-axis physics, shared by every label:
    // the even singlet first, then the near-degenerate odd/even doublets
    std::vector<LongitudinalLevel> ladder;
    ladder.reserve(1 + 2 * static_cast<std::size_t>(k_max));
    ladder.push_back(solve_even_nu(0, params.lambda, tol));
    for (int n = 1; n <= k_max; ++n) {
        ladder.push_back(solve_odd_nu(n));
        ladder.push_back(solve_even_nu(n, params.lambda, tol));
    }

    std::vector<SpectrumLine> lines;
    lines.reserve(labels.size() * ladder.size());
    for (const auto& label : labels) {
        const double e_landau = landau_energy(params, label.n_landau);
        for (const auto& level : ladder)
            lines.push_back({label, level, e_landau, e_landau + level.energy_hartree});
    }

    const auto parity_rank = [](Parity p) { return p == Parity::odd ? 0 : 1; };
    std::sort(lines.begin(), lines.end(), [&](const SpectrumLine& a, const SpectrumLine& b) {
        if (a.e_total_hartree != b.e_total_hartree) return a.e_total_hartree < b.e_total_hartree;
        const int pa = parity_rank(a.longitudinal.parity);
        const int pb = parity_rank(b.longitudinal.parity);
        if (pa != pb) return pa < pb;
        if (a.landau.m != b.landau.m) return a.landau.m > b.landau.m;
        if (a.landau.n_landau != b.landau.n_landau) return a.landau.n_landau < b.landau.n_landau;
        if (a.landau.n_rho != b.landau.n_rho) return a.landau.n_rho < b.landau.n_rho;
        return a.longitudinal.k < b.longitudinal.k;
    });
    return lines;
}

}  // namespace hsf
