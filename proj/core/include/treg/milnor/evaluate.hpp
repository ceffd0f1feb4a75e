#pragma once

#include <complex>
#include <vector>

#include "treg/milnor/registry.hpp"

namespace treg::milnor {

// constant * prod factor(P)^e at a point given in the ambient's coordinates.
// Throws indeterminate-value when a factor with negative exponent vanishes at P.
std::complex<double> eval_factored(const FactorRegistry& reg, const FactoredFunction& f,
                                   const std::vector<std::complex<double>>& point);
GaussRational eval_factored_exact(const FactorRegistry& reg, const FactoredFunction& f,
                                  const std::vector<GaussRational>& point);

}  // namespace treg::milnor
