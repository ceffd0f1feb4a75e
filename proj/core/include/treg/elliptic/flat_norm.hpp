#pragma once

#include <complex>
#include <memory>
#include <utility>
#include <vector>

#include "treg/elliptic/weierstrass.hpp"

namespace treg::elliptic {

// Degree-zero divisor on C/L given by points of C (representatives) and multiplicities.
using AnalyticDivisor = std::vector<std::pair<cplx, long>>;

// Harmonic log-norm of the canonical section of the flat bundle attached to a degree-zero divisor:
//   log N(z) = sum n_i log|sigma(z - a_i)| + Re(conj(c) z) + offset,
// with c fixed so that log N is doubly periodic. The additive offset is a free normalization.
class FlatNormField {
public:
    FlatNormField(std::shared_ptr<const WeierstrassEngine> engine, AnalyticDivisor divisor, long double offset = 0);

    const AnalyticDivisor& divisor() const { return divisor_; }
    const WeierstrassEngine& engine() const { return *engine_; }
    std::complex<long double> correction() const { return c_; }
    long double offset() const { return offset_; }

    // Distance from z to the support, modulo the lattice.
    double distance_to_support(cplx z) const;
    long double log_norm(std::complex<long double> z) const;
    double operator()(cplx z) const { return static_cast<double>(log_norm(std::complex<long double>(z))); }

private:
    std::shared_ptr<const WeierstrassEngine> engine_;
    AnalyticDivisor divisor_;
    std::complex<long double> c_{0, 0};
    long double offset_;
};

double flat_log_norm(const FlatNormField& field, cplx z);

}  // namespace treg::elliptic
