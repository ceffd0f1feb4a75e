#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "treg/elliptic/flat_norm.hpp"

namespace treg::quad {

struct ScalarField {
    std::function<long double(std::complex<long double>)> value;
    std::function<double(std::complex<double>)> distance_to_support;
};

ScalarField flat_norm_field(std::shared_ptr<const elliptic::FlatNormField> field);
// log|c prod (z - a)^n| on the plane.
ScalarField log_abs_field(std::vector<std::pair<std::complex<double>, long>> zeros, std::complex<double> c = 1.0);
ScalarField constant_field(double c);

// origin + k a / na + l b / nb, 0 <= k < na, 0 <= l < nb.
struct Grid {
    std::complex<double> origin{0, 0};
    std::complex<double> a{1, 0}, b{0, 1};
    int na = 8, nb = 8;
};

struct HarmonicityResult {
    double max_residual = 0;
    double h = 0;
    std::size_t points = 0;
};

// Max |five-point Laplacian| over the grid. Throws grid-touches-support when a grid point lies
// within 2h of the support.
HarmonicityResult harmonicity_check(const ScalarField& field, const Grid& grid, double h);

struct HarmonicityFit {
    std::vector<HarmonicityResult> runs;
    double slope = 0;     // least-squares slope of log residual against log h
    double constant = 0;  // C in residual ~ C h^slope
};

HarmonicityFit harmonicity_fit(const ScalarField& field, const Grid& grid, const std::vector<double>& steps);

}  // namespace treg::quad
