#pragma once

#include <utility>
#include <vector>

#include "treg/exact/gauss_rational.hpp"

namespace treg::exact {

// c = unit * prod prime^exponent with unit in {1, -1, i, -i} and each Gaussian prime
// normalized to the associate with re > 0, im >= 0. Primes are sorted.
struct GaussianFactorization {
    GaussRational unit{1};
    std::vector<std::pair<GaussRational, long>> primes;
};

// Throws invalid-argument for zero, or when a norm has a composite cofactor beyond trial division.
GaussianFactorization factor_gaussian(const GaussRational& c);

}  // namespace treg::exact
