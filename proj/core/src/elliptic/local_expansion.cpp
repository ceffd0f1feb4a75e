#include "treg/elliptic/local_expansion.hpp"

#include "treg/error.hpp"

namespace treg::elliptic {

using exact::GaussRational;
using exact::Laurent;

namespace {

// sqrt of a power series with constant term r0^2, choosing the branch r0.
Laurent sqrt_series(const Laurent& g, const GaussRational& r0) {
    const int n = g.precision();
    std::vector<GaussRational> c(static_cast<std::size_t>(n));
    c[0] = r0;
    GaussRational inv = (GaussRational(2) * r0).inverse();
    for (int k = 1; k < n; ++k) {
        GaussRational s = g.coefficient(k);
        for (int j = 1; j < k; ++j) s -= c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
        c[static_cast<std::size_t>(k)] = s * inv;
    }
    return {0, std::move(c)};
}

}  // namespace

LocalChart local_chart(const ExactCurve& e, const ExactPoint& p, int precision) {
    if (e.degenerate()) fail(ErrorCode::singular_curve, "no local charts on a degenerate curve");
    if (!e.contains(p)) fail(ErrorCode::point_not_on_curve, "chart requested at a point off the curve");
    const int n = precision;
    const Laurent one = Laurent::constant(GaussRational(1), n);
    const Laurent t = Laurent::monomial(GaussRational(1), 1, n);

    if (p.is_infinity()) {
        // w = 1/x solves w = t^2 (1 + b w^2 + c w^3)
        Laurent t2 = Laurent::monomial(GaussRational(1), 2, n);
        Laurent bb = Laurent::constant(e.b(), n), cc = Laurent::constant(e.c(), n);
        Laurent w = t2;
        for (int it = 0; it < n; ++it) w = t2 * (one + bb * w * w + cc * w * w * w);
        Laurent x = w.inverse();
        return {x, x * t.inverse()};
    }
    const GaussRational& x0 = p.x();
    const GaussRational& y0 = p.y();
    if (!y0.is_zero()) {
        Laurent x = Laurent::constant(x0, n) + t;
        Laurent g = x * x * x + Laurent::constant(e.b(), n) * x + Laurent::constant(e.c(), n);
        return {x, sqrt_series(g, y0)};
    }
    // y0 = 0: x = x0 + u with a1 u + a2 u^2 + u^3 = y^2 and t = y
    GaussRational a1 = GaussRational(3) * x0 * x0 + e.b();
    GaussRational a2 = GaussRational(3) * x0;
    Laurent inv_a1 = Laurent::constant(a1.inverse(), n);
    Laurent a2s = Laurent::constant(a2, n);
    Laurent t2 = t * t;
    Laurent u = t2 * inv_a1;
    for (int it = 0; it < n; ++it) u = (t2 - a2s * u * u - u * u * u) * inv_a1;
    return {Laurent::constant(x0, n) + u, t};
}

LocalValue local_value(const ExactCurve& e, const ExactPoint& p, const exact::Polynomial& f, int precision) {
    if (f.variables().size() != 2) fail(ErrorCode::invalid_argument, "local_value expects a polynomial in (x, y)");
    LocalChart ch = local_chart(e, p, precision);
    Laurent v = f.evaluate_in<Laurent>({ch.x, ch.y},
                                       [precision](const GaussRational& c) { return Laurent::constant(c, precision); });
    auto val = v.valuation();
    if (!val) fail(ErrorCode::invalid_argument, "vanishing order exceeds the series precision; raise precision");
    return {*val, v.leading()};
}

}  // namespace treg::elliptic
