#include "treg/quad/surjectivity.hpp"

#include <algorithm>
#include <boost/numeric/interval.hpp>
#include <cmath>
#include <sstream>

#include "treg/error.hpp"

namespace treg::quad {

namespace {

using interval = boost::numeric::interval<double>;

}  // namespace

SurjectivityReport surjectivity_report(const SurjectivityOptions& opts) {
    SurjectivityReport rep;
    std::ostringstream diag;
    bool agree = true;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            auto g = theorem_integrand(i, j);
            MatrixEntry& e = rep.entries[i - 1][j - 1];
            e.i = i;
            e.j = j;
            e.quad = integrate_c(g, opts.tol, opts.max_depth);
            if (!e.quad.converged)
                fail(ErrorCode::entry_non_convergence,
                     g.name + ": error estimate " + std::to_string(e.quad.abs_error_estimate) + " above tolerance");
            e.mc = mc_oracle(g, opts.mc_seed + static_cast<std::uint64_t>(2 * (i - 1) + (j - 1)), opts.mc_n);
            e.bound = std::max(e.quad.abs_error_estimate, opts.tol);
            e.oracle_agrees = std::abs(e.quad.value - e.mc.estimate) <= 3 * (e.mc.std_error + e.quad.abs_error_estimate);
            if (!e.oracle_agrees) {
                agree = false;
                diag << g.name << " disagrees with its Monte Carlo estimate; ";
            }
        }
    auto enclose = [&](int i, int j) {
        const auto& e = rep.entries[i][j];
        return interval(e.quad.value - e.bound, e.quad.value + e.bound);
    };
    interval det = enclose(0, 0) * enclose(1, 1) - enclose(0, 1) * enclose(1, 0);
    rep.determinant = rep.entries[0][0].quad.value * rep.entries[1][1].quad.value -
                      rep.entries[0][1].quad.value * rep.entries[1][0].quad.value;
    rep.det_lower = det.lower();
    rep.det_upper = det.upper();
    bool excludes_zero = !boost::numeric::zero_in(det);
    if (!excludes_zero) diag << "determinant enclosure [" << det.lower() << ", " << det.upper() << "] contains 0; ";
    rep.verdict = excludes_zero && agree;
    rep.diagnostic = diag.str();
    if (!rep.diagnostic.empty()) rep.diagnostic.resize(rep.diagnostic.size() - 2);
    return rep;
}

}  // namespace treg::quad
