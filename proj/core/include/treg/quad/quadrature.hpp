#pragma once

#include <cstdint>
#include <string>

#include "treg/quad/integrand.hpp"

namespace treg::quad {

struct QuadratureResult {
    double value = 0;
    double abs_error_estimate = 0;
    std::uint64_t nodes = 0;
    bool converged = false;
    std::string method;
};

// Adaptive quadrature in (u, theta) with r = tan(u): tensor 15-point Kronrod panels with the embedded
// 7-point Gauss rule as error estimate, worst panel split first, ties broken by creation order.
// Singularities are placed on panel edges. Stops when the summed estimate is <= tol; panels at
// max_depth are not split, and the result is then returned with converged = false.
// Throws refused-unfolded for fold-required integrands on unbounded domains.
QuadratureResult integrate_c(const Integrand2D& g, double tol = 1e-8, int max_depth = 14);

}  // namespace treg::quad
