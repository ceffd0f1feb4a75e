#include "treg/elliptic/flat_norm.hpp"

#include <cmath>
#include <limits>

#include "treg/error.hpp"

namespace treg::elliptic {

FlatNormField::FlatNormField(std::shared_ptr<const WeierstrassEngine> engine, AnalyticDivisor divisor, long double offset)
    : engine_(std::move(engine)), offset_(offset) {
    if (!engine_) fail(ErrorCode::invalid_argument, "missing Weierstrass engine");
    long degree = 0;
    for (const auto& [a, n] : divisor) {
        if (n == 0) continue;
        degree += n;
        divisor_.emplace_back(a, n);
    }
    if (degree != 0) fail(ErrorCode::nonzero_degree, "flat norm needs a degree-zero divisor, got " + std::to_string(degree));

    std::complex<long double> s = 0;
    for (const auto& [a, n] : divisor_) s += static_cast<long double>(n) * std::complex<long double>(a);
    // Re(conj(c) w_k) = Re(E_k s), a 2x2 real system in (Re c, Im c)
    const Lattice& L = engine_->lattice();
    long double r1 = std::real(engine_->quasi_period(1, 0) * s);
    long double r2 = std::real(engine_->quasi_period(0, 1) * s);
    long double a11 = L.w1.real(), a12 = L.w1.imag(), a21 = L.w2.real(), a22 = L.w2.imag();
    long double det = a11 * a22 - a12 * a21;
    c_ = {(r1 * a22 - a12 * r2) / det, (a11 * r2 - a21 * r1) / det};
}

double FlatNormField::distance_to_support(cplx z) const {
    double best = std::numeric_limits<double>::infinity();
    const Lattice& L = engine_->reduced_basis();
    for (const auto& [a, n] : divisor_) {
        cplx d = L.reduce(z - a);
        // the reduced representative may miss a closer neighbour on a skewed cell
        for (int m = -1; m <= 1; ++m)
            for (int k = -1; k <= 1; ++k) best = std::min(best, std::abs(d + L.point(m, k)));
    }
    return best;
}

long double FlatNormField::log_norm(std::complex<long double> z) const {
    if (divisor_.empty()) return offset_;
    cplx zd(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    if (distance_to_support(zd) <= 1e-12 * std::abs(engine_->lattice().w1))
        fail(ErrorCode::evaluation_at_support, "log norm evaluated on the divisor support");
    long double acc = offset_;
    for (const auto& [a, n] : divisor_)
        acc += static_cast<long double>(n) * engine_->log_abs_sigma(z - std::complex<long double>(a));
    acc += std::real(std::conj(c_) * z);
    return acc;
}

double flat_log_norm(const FlatNormField& field, cplx z) { return field(z); }

}  // namespace treg::elliptic
