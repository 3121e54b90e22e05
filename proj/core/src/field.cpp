#include "hsf/field.hpp"

#include <cmath>
#include <string>

#include "hsf/errors.hpp"

namespace hsf {

namespace {

FieldParams from_lambda_value(double lambda, std::optional<double> h_gauss) {
    const double gamma = std::exp(2.0 * lambda);
    if (!std::isfinite(gamma) || gamma <= 0.0)
        throw invalid_input("field: gamma = exp(2 lambda) leaves double range at lambda = " +
                            std::to_string(lambda));
    return {gamma, lambda, std::exp(-lambda), h_gauss};
}

}  // namespace

FieldParams from_lambda(double lambda) {
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw invalid_input("from_lambda: lambda must be a positive finite real, got " +
                            std::to_string(lambda));
    return from_lambda_value(lambda, std::nullopt);
}

FieldParams from_gamma(double gamma) {
    if (!std::isfinite(gamma) || gamma <= 0.0)
        throw invalid_input("from_gamma: gamma must be a positive finite real, got " +
                            std::to_string(gamma));
    const double lambda = 0.5 * std::log(gamma);
    return {gamma, lambda, std::exp(-lambda), std::nullopt};
}

FieldParams from_gauss(double h_gauss) {
    if (!std::isfinite(h_gauss) || h_gauss <= 0.0)
        throw invalid_input("from_gauss: field must be a positive finite value in gauss, got " +
                            std::to_string(h_gauss));
    const double gamma = h_gauss / kH0Gauss;
    if (!std::isfinite(gamma) || gamma <= 0.0)
        throw invalid_input("from_gauss: field " + std::to_string(h_gauss) +
                            " G maps outside the representable gamma range");
    FieldParams p = from_gamma(gamma);
    p.h_gauss = h_gauss;
    return p;
}

}  // namespace hsf
