#pragma once

#include <optional>

namespace hsf {

// Field strength at which the magnetic length equals the Bohr radius,
// H0 = m_e^2 e^3 c / hbar^3 in gaussian-cgs units.  CODATA 2018 inputs:
//   m_e  = 9.1093837015e-28 g
//   e    = 4.80320471257e-10 statC
//   c    = 2.99792458e10 cm/s
//   hbar = 1.054571817e-27 erg s
// => H0 = (9.1093837015e-28)^2 (4.80320471257e-10)^3 (2.99792458e10)
//         / (1.054571817e-27)^3 = 2.3505175693e9 G.
inline constexpr double kH0Gauss = 2.3505175693148009e9;

// One magnetic field in the three equivalent parametrizations used
// throughout: gamma = H/H0, lambda = ln(a/a_H) = ln(gamma)/2, and the
// magnetic length a_H in Bohr radii (a_H/a = gamma^(-1/2)).  h_gauss is
// present only when the field was given in physical units.
struct FieldParams {
    double gamma;
    double lambda;
    double a_h_bohr;
    std::optional<double> h_gauss;
};

// Requires lambda > 0; the logarithmic parametrization is the natural input
// for the strong-field formulas downstream.
FieldParams from_lambda(double lambda);

// Any finite gamma > 0 is representable.  lambda may come out non-positive;
// the spectrum assembly is where the strong-field regime gets enforced.
FieldParams from_gamma(double gamma);

// Physical-units front end, h in gauss.
FieldParams from_gauss(double h_gauss);

}  // namespace hsf
