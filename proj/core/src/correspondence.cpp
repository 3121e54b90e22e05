#include "hsf/correspondence.hpp"

#include <cstdlib>
#include <string>

#include "hsf/errors.hpp"

namespace hsf {

namespace {

void validate(const HydrogenLabel& h) {
    if (h.n < 1)
        throw invalid_input("hydrogen label: n >= 1 violated (n = " + std::to_string(h.n) + ")");
    if (h.l < 0 || h.l > h.n - 1)
        throw invalid_input("hydrogen label: 0 <= l <= n-1 violated (n = " +
                            std::to_string(h.n) + ", l = " + std::to_string(h.l) + ")");
    if (std::abs(h.m) > h.l)
        throw invalid_input("hydrogen label: |m| <= l violated (l = " + std::to_string(h.l) +
                            ", m = " + std::to_string(h.m) + ")");
}

void validate(const StrongFieldLabel& s) {
    if (s.n_rho < 0)
        throw invalid_input("strong-field label: n_rho >= 0 violated (n_rho = " +
                            std::to_string(s.n_rho) + ")");
    if (s.n_z < 0)
        throw invalid_input("strong-field label: n_z >= 0 violated (n_z = " +
                            std::to_string(s.n_z) + ")");
}

}  // namespace

StrongFieldLabel hydrogen_to_strong(const HydrogenLabel& h) {
    validate(h);
    return {h.n - h.l - 1, h.l - std::abs(h.m), h.m};
}

HydrogenLabel strong_to_hydrogen(const StrongFieldLabel& s) {
    validate(s);
    const int l = s.n_z + std::abs(s.m);
    return {s.n_rho + l + 1, l, s.m};
}

std::vector<HydrogenLabel> ground_ancestors(int count) {
    if (count < 1) throw invalid_input("ground_ancestors: count must be >= 1");
    std::vector<HydrogenLabel> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int q = 0; q < count; ++q) out.push_back({q + 1, q, -q});
    return out;
}

}  // namespace hsf
