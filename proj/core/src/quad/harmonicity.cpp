#include "treg/quad/harmonicity.hpp"

#include <cmath>
#include <limits>

#include "treg/error.hpp"

namespace treg::quad {

ScalarField flat_norm_field(std::shared_ptr<const elliptic::FlatNormField> field) {
    return {[field](std::complex<long double> z) { return field->log_norm(z); },
            [field](std::complex<double> z) { return field->distance_to_support(z); }};
}

ScalarField log_abs_field(std::vector<std::pair<std::complex<double>, long>> zeros, std::complex<double> c) {
    if (c == 0.0) fail(ErrorCode::invalid_argument, "log|0| is not a field");
    return {[zeros, c](std::complex<long double> z) {
                long double v = std::log(std::abs(std::complex<long double>(c)));
                for (const auto& [a, n] : zeros) v += n * std::log(std::abs(z - std::complex<long double>(a)));
                return v;
            },
            [zeros](std::complex<double> z) {
                double d = std::numeric_limits<double>::infinity();
                for (const auto& [a, n] : zeros)
                    if (n != 0) d = std::min(d, std::abs(z - a));
                return d;
            }};
}

ScalarField constant_field(double c) {
    return {[c](std::complex<long double>) { return static_cast<long double>(c); },
            [](std::complex<double>) { return std::numeric_limits<double>::infinity(); }};
}

HarmonicityResult harmonicity_check(const ScalarField& field, const Grid& grid, double h) {
    if (!(h > 0)) fail(ErrorCode::invalid_argument, "step must be positive");
    if (grid.na < 1 || grid.nb < 1) fail(ErrorCode::invalid_argument, "empty grid");
    using lc = std::complex<long double>;
    HarmonicityResult out;
    out.h = h;
    const long double H = h;
    for (int k = 0; k < grid.na; ++k)
        for (int l = 0; l < grid.nb; ++l) {
            std::complex<double> z = grid.origin + grid.a * (double(k) / grid.na) + grid.b * (double(l) / grid.nb);
            if (field.distance_to_support(z) < 2 * h)
                fail(ErrorCode::grid_touches_support, "grid point within 2h of the support");
            lc c(z);
            long double lap = field.value(c + lc(H, 0)) + field.value(c - lc(H, 0)) + field.value(c + lc(0, H)) +
                              field.value(c - lc(0, H)) - 4 * field.value(c);
            out.max_residual = std::max(out.max_residual, static_cast<double>(std::abs(lap / (H * H))));
            ++out.points;
        }
    return out;
}

HarmonicityFit harmonicity_fit(const ScalarField& field, const Grid& grid, const std::vector<double>& steps) {
    if (steps.size() < 2) fail(ErrorCode::invalid_argument, "a fit needs at least two steps");
    HarmonicityFit fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double h : steps) {
        fit.runs.push_back(harmonicity_check(field, grid, h));
        double x = std::log(h), y = std::log(fit.runs.back().max_residual);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(steps.size());
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.constant = std::exp((sy - fit.slope * sx) / n);
    return fit;
}

}  // namespace treg::quad
