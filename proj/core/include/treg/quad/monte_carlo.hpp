#pragma once

#include <cstdint>
#include <string>

#include "treg/quad/integrand.hpp"

namespace treg::quad {

enum class McMode {
    plain,
    antithetic,  // average each sample with its image under the integrand's symmetry
};

struct McEstimate {
    double estimate = 0;
    double std_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string method;
};

// Samples (u, theta) uniformly on the compactified domain, i.e. radial density proportional to
// 1 / (1 + r^2). mt19937_64 with 53-bit uniforms in the open unit interval.
// Plain mode refuses fold-required integrands on unbounded domains (refused-unfolded);
// antithetic mode needs a symmetry tag.
McEstimate mc_oracle(const Integrand2D& g, std::uint64_t seed, std::uint64_t n, McMode mode = McMode::plain);

}  // namespace treg::quad
