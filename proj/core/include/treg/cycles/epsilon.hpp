#pragma once

#include <complex>
#include <vector>

#include "treg/milnor/registry.hpp"

namespace treg::cycles {

// h_eps = 1 + (f - 1) k / (k + eps). The registry must outlive the family.
class EpsilonFamily {
public:
    EpsilonFamily(const milnor::FactorRegistry& reg, milnor::FactoredFunction f, milnor::FactoredFunction k,
                  double epsilon);

    double epsilon() const { return eps_; }
    // Throws pole-of-k when k has a pole at P or k(P) = -eps.
    std::complex<double> operator()(const std::vector<std::complex<double>>& point) const;

private:
    const milnor::FactorRegistry* reg_;
    milnor::FactoredFunction f_, k_;
    double eps_;
};

}  // namespace treg::cycles
