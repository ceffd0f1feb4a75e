#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "treg/quad/monte_carlo.hpp"
#include "treg/quad/quadrature.hpp"

namespace treg::quad {

struct SurjectivityOptions {
    double tol = 1e-8;
    int max_depth = 14;
    std::uint64_t mc_n = 200000;
    std::uint64_t mc_seed = 1;
};

struct MatrixEntry {
    int i = 0, j = 0;
    QuadratureResult quad;
    McEstimate mc;
    double bound = 0;  // half-width of the enclosure: max(error estimate, tol)
    bool oracle_agrees = false;
};

struct SurjectivityReport {
    std::array<std::array<MatrixEntry, 2>, 2> entries;
    double determinant = 0;
    double det_lower = 0, det_upper = 0;
    bool verdict = false;  // enclosure excludes 0 and every entry agrees with its oracle
    std::string diagnostic;
};

// Throws entry-non-convergence if an entry does not converge.
SurjectivityReport surjectivity_report(const SurjectivityOptions& opts = {});

}  // namespace treg::quad
