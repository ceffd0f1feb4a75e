#pragma once

#include <complex>

namespace treg::elliptic {

using cplx = std::complex<double>;

// Period lattice Z*w1 + Z*w2 with Im(w2/w1) > 0.
struct Lattice {
    cplx w1;
    cplx w2;

    // Throws lattice-degenerate unless Im(w2/w1) > 0.
    void validate() const;
    cplx tau() const { return w2 / w1; }
    cplx point(double m, double n) const { return m * w1 + n * w2; }
    // Coordinates (m, n) of z in the real basis (w1, w2).
    std::pair<double, double> coordinates(cplx z) const;
    // Representative of z with coordinates in [-1/2, 1/2).
    cplx reduce(cplx z) const;
    double covolume() const;
};

}  // namespace treg::elliptic
