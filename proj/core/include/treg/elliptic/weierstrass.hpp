#pragma once

#include <complex>

#include "treg/elliptic/lattice.hpp"

namespace treg::elliptic {

struct WeierstrassValues {
    cplx wp;
    cplx wp_prime;
    cplx sigma;
    cplx zeta;
};

// Weierstrass functions of a lattice through Jacobi theta series in the nome q = exp(i pi tau),
// after Lagrange-Gauss reduction of the basis (|q| <= exp(-pi sqrt(3)/2)).
// `series_terms` bounds the number of theta/Eisenstein q-series terms.
class WeierstrassEngine {
public:
    explicit WeierstrassEngine(Lattice lattice, int series_terms = 20);

    const Lattice& lattice() const { return lattice_; }
    const Lattice& reduced_basis() const { return reduced_; }
    int series_terms() const { return terms_; }

    cplx wp(cplx z) const;
    cplx wp_prime(cplx z) const;
    cplx sigma(cplx z) const;
    cplx zeta(cplx z) const;
    WeierstrassValues evaluate(cplx z) const;

    cplx g2() const { return g2_; }
    cplx g3() const { return g3_; }

    // E(w) with zeta(z + w) = zeta(z) + E(w) for every lattice vector w = m w1 + n w2.
    std::complex<long double> quasi_period(long m, long n) const;
    cplx quasi_period_w1() const { return cplx(quasi_period(1, 0)); }
    cplx quasi_period_w2() const { return cplx(quasi_period(0, 1)); }

    // log|sigma(z)| evaluated after lattice reduction of z plus the exact quasi-periodicity term.
    long double log_abs_sigma(std::complex<long double> z) const;
    // Same quantity from the theta series at the unreduced argument; only accurate for moderate |z|.
    long double log_abs_sigma_direct(std::complex<long double> z) const;

private:
    struct ThetaJet {
        std::complex<long double> t0, t1, t2, t3;
    };
    ThetaJet theta1(std::complex<long double> v) const;
    void check_off_lattice(cplx z) const;

    Lattice lattice_;
    Lattice reduced_;
    // original = M * reduced, M integral with det 1: w1 = a r1 + b r2, w2 = c r1 + d r2
    long a_ = 1, b_ = 0, c_ = 0, d_ = 1;
    int terms_;
    std::complex<long double> log_q_;  // i pi tau of the reduced basis
    std::complex<long double> w1r_;
    std::complex<long double> eta_;      // zeta(r1 / 2)
    std::complex<long double> e1_, e2_;  // quasi-periods of the reduced basis
    std::complex<long double> theta1_prime0_;
    cplx g2_, g3_;
};

// Convenience wrapper: all four values at z.
WeierstrassValues weierstrass_functions(const Lattice& lattice, cplx z, int series_terms = 20);

// Truncated lattice sums over max(|m|,|n|) <= n_max: an independent, slowly converging reference.
cplx wp_lattice_sum(const Lattice& lattice, cplx z, int n_max);
cplx g2_lattice_sum(const Lattice& lattice, int n_max);
cplx g3_lattice_sum(const Lattice& lattice, int n_max);

}  // namespace treg::elliptic
