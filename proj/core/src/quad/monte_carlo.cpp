#include "treg/quad/monte_carlo.hpp"

#include <cmath>
#include <random>

#include "treg/error.hpp"

namespace treg::quad {

namespace {

// Uniform in the open interval (0, 1) from the top 53 bits.
double open_uniform(std::mt19937_64& rng) { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; }

}  // namespace

McEstimate mc_oracle(const Integrand2D& g, std::uint64_t seed, std::uint64_t n, McMode mode) {
    if (n < 2) fail(ErrorCode::invalid_argument, "Monte Carlo needs at least two samples");
    if (mode == McMode::plain && g.decay == DecayClass::fold_required && !g.domain.bounded())
        fail(ErrorCode::refused_unfolded, g.name + " needs symmetric sampling or a bounded domain");
    if (mode == McMode::antithetic && g.symmetry == Symmetry::none)
        fail(ErrorCode::invalid_argument, g.name + " has no symmetry to pair samples with");

    const PolarDomain& d = g.domain;
    const double area = d.u_max * (d.theta_max - d.theta_min);
    std::mt19937_64 rng(seed);
    // Welford running mean and variance
    long double mean = 0, m2 = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        double u = d.u_max * open_uniform(rng);
        double theta = d.theta_min + (d.theta_max - d.theta_min) * open_uniform(rng);
        double r = std::tan(u);
        cplx x = std::polar(r, theta);
        double v = g.eval(x);
        if (mode == McMode::antithetic) v = (v + g.eval(g.reflect(x))) / 2;
        v *= r * (1 + r * r) * area;
        long double delta = v - mean;
        mean += delta / static_cast<long double>(k);
        m2 += delta * (v - mean);
    }
    McEstimate out;
    out.estimate = static_cast<double>(mean);
    out.std_error = static_cast<double>(std::sqrt(m2 / static_cast<long double>(n - 1) / static_cast<long double>(n)));
    out.samples = n;
    out.seed = seed;
    out.method = mode == McMode::plain ? "mc-polar-tan" : "mc-polar-tan-antithetic";
    return out;
}

}  // namespace treg::quad
