#include "treg/elliptic/lattice.hpp"

#include <cmath>

#include "treg/error.hpp"

namespace treg::elliptic {

void Lattice::validate() const {
    if (std::abs(w1) == 0.0 || !std::isfinite(std::abs(w1)) || !std::isfinite(std::abs(w2)))
        fail(ErrorCode::lattice_degenerate, "period is zero or not finite");
    if (!(tau().imag() > 1e-12)) fail(ErrorCode::lattice_degenerate, "Im(w2/w1) must be positive");
}

std::pair<double, double> Lattice::coordinates(cplx z) const {
    // solve z = m w1 + n w2 over the reals
    double det = w1.real() * w2.imag() - w1.imag() * w2.real();
    double m = (z.real() * w2.imag() - z.imag() * w2.real()) / det;
    double n = (w1.real() * z.imag() - w1.imag() * z.real()) / det;
    return {m, n};
}

cplx Lattice::reduce(cplx z) const {
    auto [m, n] = coordinates(z);
    return z - std::floor(m + 0.5) * w1 - std::floor(n + 0.5) * w2;
}

double Lattice::covolume() const { return std::abs(w1.real() * w2.imag() - w1.imag() * w2.real()); }

}  // namespace treg::elliptic
