#pragma once

#include <string>
#include <vector>

#include "hsf/field.hpp"
#include "hsf/longitudinal.hpp"

namespace hsf {

// Transverse quantum numbers and the derived Landau index
// N = n_rho + (m + |m|)/2.  All m <= 0 states of fixed n_rho share one N.
struct LandauLabel {
    int n_rho;
    int m;
    int n_landau;
};

int landau_index(int n_rho, int m);

LandauLabel make_landau_label(int n_rho, int m);

// E_N = gamma (N + 1/2) hartree.  In atomic units the cyclotron quantum
// hbar e H/(m_e c) equals hbar^3 H/(m_e^2 e^3 c) hartree, i.e. gamma hartree.
double landau_energy(const FieldParams& params, int n_landau);

enum class Validity { valid, marginal, invalid };

const char* to_string(Validity v);

struct ValidityReport {
    Validity verdict;
    std::string reason;
};

// Regime thresholds.  The theory only gives the asymptotic conditions
// lambda >> 1 and lambda >> ln N; the numbers below are our cut points.
struct ValidityThresholds {
    double lambda_invalid = 1.0;
    double lambda_marginal = 3.0;
    double log_n_margin = 2.0;
};

ValidityReport validity_check(const FieldParams& params, int n_landau,
                              const ValidityThresholds& thresholds = {});

// One full 3D level: a Landau parent plus a longitudinal Coulomb level
// strictly below it.
struct SpectrumLine {
    LandauLabel landau;
    LongitudinalLevel longitudinal;
    double e_landau_hartree;
    double e_total_hartree;
};

// For each label emits the even k = 0 singlet and then the odd/even
// doublets up to k_max, sorted ascending by total energy (ties: odd before
// even, then m descending).  Labels whose validity verdict is `invalid`
// raise a regime_error naming the label.
std::vector<SpectrumLine> assemble(const FieldParams& params,
                                   const std::vector<LandauLabel>& labels,
                                   int k_max, double tol = 1e-12);

}  // namespace hsf
