#include "treg/elliptic/weierstrass.hpp"

#include <cmath>
#include <numbers>

#include "treg/error.hpp"

namespace treg::elliptic {

namespace {

using lcplx = std::complex<long double>;
constexpr long double kPi = std::numbers::pi_v<long double>;

struct Coords {
    long double m, n;
};

Coords coords_in(lcplx z, lcplx u, lcplx v) {
    long double det = u.real() * v.imag() - u.imag() * v.real();
    return {(z.real() * v.imag() - z.imag() * v.real()) / det, (u.real() * z.imag() - u.imag() * z.real()) / det};
}

long divisor_power_sum(long n, int power) {
    long s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            long p = 1;
            for (int k = 0; k < power; ++k) p *= d;
            s += p;
        }
    return s;
}

}  // namespace

WeierstrassEngine::WeierstrassEngine(Lattice lattice, int series_terms) : lattice_(lattice), terms_(series_terms) {
    lattice_.validate();
    if (terms_ < 2) fail(ErrorCode::invalid_argument, "series_terms must be at least 2");

    // Lagrange-Gauss reduction tracking r1 = p w1 + q w2, r2 = r w1 + s w2
    cplx r1 = lattice_.w1, r2 = lattice_.w2;
    long p = 1, q = 0, r = 0, s = 1;
    for (int guard = 0; guard < 200; ++guard) {
        cplx tau = r2 / r1;
        long k = std::lround(std::floor(tau.real() + 0.5));
        if (k != 0) {
            r2 -= static_cast<double>(k) * r1;
            r -= k * p;
            s -= k * q;
        }
        if (std::abs(r2) < std::abs(r1) * (1.0 - 1e-15)) {
            cplx t = r1;
            r1 = r2;
            r2 = -t;
            long np = r, nq = s;
            r = -p;
            s = -q;
            p = np;
            q = nq;
            continue;
        }
        break;
    }
    reduced_ = {r1, r2};
    // invert [[p q],[r s]] (det 1)
    a_ = s;
    b_ = -q;
    c_ = -r;
    d_ = p;

    w1r_ = lcplx(r1);
    lcplx tau = lcplx(r2) / w1r_;
    lcplx log_q = lcplx(0, kPi) * tau;
    log_q_ = log_q;

    lcplx t1 = 0, t3 = 0;
    for (int n = 0; n < terms_; ++n) {
        long double half = n + 0.5L;
        long double k = 2 * n + 1;
        lcplx qp = std::exp(log_q * (half * half)) * static_cast<long double>(n % 2 == 0 ? 1 : -1);
        t1 += qp * k;
        t3 -= qp * (k * k * k);
    }
    t1 *= 2.0L;
    t3 *= 2.0L;
    theta1_prime0_ = t1;
    eta_ = -kPi * kPi * t3 / (6.0L * w1r_ * t1);
    e1_ = 2.0L * eta_;
    e2_ = (e1_ * lcplx(r2) - lcplx(0, 2 * kPi)) / w1r_;

    lcplx q2 = std::exp(2.0L * log_q);
    lcplx s4 = 0, s6 = 0, qn = 1;
    for (int n = 1; n <= terms_; ++n) {
        qn *= q2;
        s4 += static_cast<long double>(divisor_power_sum(n, 3)) * qn;
        s6 += static_cast<long double>(divisor_power_sum(n, 5)) * qn;
    }
    lcplx base = 2.0L * kPi / w1r_;
    lcplx b2 = base * base;
    g2_ = cplx(b2 * b2 / 12.0L * (1.0L + 240.0L * s4));
    g3_ = cplx(b2 * b2 * b2 / 216.0L * (1.0L - 504.0L * s6));
}

WeierstrassEngine::ThetaJet WeierstrassEngine::theta1(lcplx v) const {
    const lcplx log_q = log_q_;
    ThetaJet j{0, 0, 0, 0};
    const lcplx I(0, 1);
    for (int n = 0; n < terms_; ++n) {
        long double half = n + 0.5L;
        long double k = 2 * n + 1;
        lcplx base = log_q * (half * half);
        lcplx ep = std::exp(base + I * k * v);
        lcplx em = std::exp(base - I * k * v);
        lcplx sn = (ep - em) / (2.0L * I);
        lcplx cs = (ep + em) / 2.0L;
        long double sign = n % 2 == 0 ? 1.0L : -1.0L;
        j.t0 += sign * sn;
        j.t1 += sign * k * cs;
        j.t2 -= sign * k * k * sn;
        j.t3 -= sign * k * k * k * cs;
    }
    j.t0 *= 2.0L;
    j.t1 *= 2.0L;
    j.t2 *= 2.0L;
    j.t3 *= 2.0L;
    return j;
}

void WeierstrassEngine::check_off_lattice(cplx z) const {
    if (std::abs(reduced_.reduce(z)) <= 1e-12 * std::abs(reduced_.w1))
        fail(ErrorCode::z_on_lattice, "argument is a lattice point");
}

cplx WeierstrassEngine::wp(cplx z) const { return evaluate(z).wp; }
cplx WeierstrassEngine::wp_prime(cplx z) const { return evaluate(z).wp_prime; }
cplx WeierstrassEngine::zeta(cplx z) const { return evaluate(z).zeta; }

cplx WeierstrassEngine::sigma(cplx z) const {
    lcplx zl(z);
    Coords c = coords_in(zl, w1r_, lcplx(reduced_.w2));
    long double m = std::floor(c.m + 0.5L), n = std::floor(c.n + 0.5L);
    lcplx lam = m * w1r_ + n * lcplx(reduced_.w2);
    lcplx z0 = zl - lam;
    lcplx v = kPi * z0 / w1r_;
    ThetaJet j = theta1(v);
    lcplx s0 = (w1r_ / kPi) * std::exp(eta_ * z0 * z0 / w1r_) * j.t0 / theta1_prime0_;
    lcplx e = m * e1_ + n * e2_;
    long mi = std::lround(m), ni = std::lround(n);
    long double sign = ((mi + ni + mi * ni) % 2 == 0) ? 1.0L : -1.0L;
    return cplx(sign * s0 * std::exp(e * (z0 + lam / 2.0L)));
}

WeierstrassValues WeierstrassEngine::evaluate(cplx z) const {
    check_off_lattice(z);
    lcplx zl(z);
    Coords c = coords_in(zl, w1r_, lcplx(reduced_.w2));
    long double m = std::floor(c.m + 0.5L), n = std::floor(c.n + 0.5L);
    lcplx lam = m * w1r_ + n * lcplx(reduced_.w2);
    lcplx z0 = zl - lam;
    lcplx k = kPi / w1r_;
    ThetaJet j = theta1(k * z0);
    lcplx l1 = j.t1 / j.t0, l2 = j.t2 / j.t0, l3 = j.t3 / j.t0;
    WeierstrassValues out{};
    out.wp = cplx(-2.0L * eta_ / w1r_ - k * k * (l2 - l1 * l1));
    out.wp_prime = cplx(-k * k * k * (l3 - 3.0L * l2 * l1 + 2.0L * l1 * l1 * l1));
    out.zeta = cplx(2.0L * eta_ * z0 / w1r_ + k * l1 + m * e1_ + n * e2_);
    out.sigma = sigma(z);
    return out;
}

std::complex<long double> WeierstrassEngine::quasi_period(long m, long n) const {
    // lattice vector m w1 + n w2 in the reduced basis
    long mr = m * a_ + n * c_;
    long nr = m * b_ + n * d_;
    return static_cast<long double>(mr) * e1_ + static_cast<long double>(nr) * e2_;
}

long double WeierstrassEngine::log_abs_sigma(lcplx z) const {
    lcplx r2(reduced_.w2);
    Coords c = coords_in(z, w1r_, r2);
    long double m = std::floor(c.m + 0.5L), n = std::floor(c.n + 0.5L);
    lcplx lam = m * w1r_ + n * r2;
    lcplx z0 = z - lam;
    ThetaJet j = theta1(kPi * z0 / w1r_);
    if (std::abs(j.t0) == 0.0L) fail(ErrorCode::evaluation_at_support, "sigma vanishes at a lattice point");
    long double base = std::log(std::abs(w1r_ / kPi)) + std::real(eta_ * z0 * z0 / w1r_) + std::log(std::abs(j.t0)) -
                       std::log(std::abs(theta1_prime0_));
    lcplx e = m * e1_ + n * e2_;
    return base + std::real(e * (z0 + lam / 2.0L));
}

long double WeierstrassEngine::log_abs_sigma_direct(lcplx z) const {
    ThetaJet j = theta1(kPi * z / w1r_);
    return std::log(std::abs(w1r_ / kPi)) + std::real(eta_ * z * z / w1r_) + std::log(std::abs(j.t0)) -
           std::log(std::abs(theta1_prime0_));
}

WeierstrassValues weierstrass_functions(const Lattice& lattice, cplx z, int series_terms) {
    return WeierstrassEngine(lattice, series_terms).evaluate(z);
}

cplx wp_lattice_sum(const Lattice& lattice, cplx z, int n_max) {
    lattice.validate();
    cplx acc = 1.0 / (z * z);
    for (int m = -n_max; m <= n_max; ++m)
        for (int n = -n_max; n <= n_max; ++n) {
            if (m == 0 && n == 0) continue;
            cplx w = lattice.point(m, n);
            acc += 1.0 / ((z - w) * (z - w)) - 1.0 / (w * w);
        }
    return acc;
}

namespace {

cplx eisenstein_sum(const Lattice& lattice, int n_max, int power) {
    lattice.validate();
    cplx acc = 0;
    for (int m = -n_max; m <= n_max; ++m)
        for (int n = -n_max; n <= n_max; ++n) {
            if (m == 0 && n == 0) continue;
            acc += std::pow(lattice.point(m, n), -power);
        }
    return acc;
}

}  // namespace

cplx g2_lattice_sum(const Lattice& lattice, int n_max) { return 60.0 * eisenstein_sum(lattice, n_max, 4); }
cplx g3_lattice_sum(const Lattice& lattice, int n_max) { return 140.0 * eisenstein_sum(lattice, n_max, 6); }

}  // namespace treg::elliptic
