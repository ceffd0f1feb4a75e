#include "treg/quad/quadrature.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>

#include "treg/error.hpp"

namespace treg::quad {

namespace {

// 15 Kronrod nodes on [-1, 1]; the Gauss weight is zero off the 7 embedded nodes.
struct Rule {
    std::array<double, 15> x{}, wk{}, wg{};

    Rule() {
        const auto& ka = boost::math::quadrature::gauss_kronrod<double, 15>::abscissa();
        const auto& kw = boost::math::quadrature::gauss_kronrod<double, 15>::weights();
        const auto& gw = boost::math::quadrature::gauss<double, 7>::weights();
        for (std::size_t k = 0; k < ka.size(); ++k) {
            double g = k % 2 == 0 ? gw[k / 2] : 0.0;
            x[7 + k] = ka[k];
            wk[7 + k] = kw[k];
            wg[7 + k] = g;
            x[7 - k] = -ka[k];
            wk[7 - k] = kw[k];
            wg[7 - k] = g;
        }
    }
};

const Rule& rule() {
    static const Rule r;
    return r;
}

struct Panel {
    double u0, u1, t0, t1;
    int depth;
    std::uint64_t id;
    double value = 0, error = 0;
};

struct WorstFirst {
    bool operator()(const Panel& a, const Panel& b) const {
        if (a.error != b.error) return a.error < b.error;
        return a.id > b.id;
    }
};

void evaluate(const Integrand2D& g, Panel& p) {
    const Rule& R = rule();
    const double hu = (p.u1 - p.u0) / 2, cu = (p.u1 + p.u0) / 2;
    const double ht = (p.t1 - p.t0) / 2, ct = (p.t1 + p.t0) / 2;
    std::array<double, 15> polar_weight{};
    std::array<double, 15> radius{};
    for (std::size_t a = 0; a < 15; ++a) {
        double r = std::tan(cu + hu * R.x[a]);
        radius[a] = r;
        polar_weight[a] = r * (1 + r * r);  // r dr = r (1 + r^2) du
    }
    double k = 0, gs = 0;
    for (std::size_t b = 0; b < 15; ++b) {
        const cplx dir = std::polar(1.0, ct + ht * R.x[b]);
        double row_k = 0, row_g = 0;
        for (std::size_t a = 0; a < 15; ++a) {
            double f = g.eval(radius[a] * dir) * polar_weight[a];
            row_k += R.wk[a] * f;
            row_g += R.wg[a] * f;
        }
        k += R.wk[b] * row_k;
        gs += R.wg[b] * row_g;
    }
    p.value = k * hu * ht;
    p.error = std::abs(k - gs) * hu * ht;
}

std::vector<double> breakpoints(double lo, double hi, int pieces, const std::vector<double>& extra) {
    std::vector<double> out;
    for (int k = 0; k <= pieces; ++k) out.push_back(lo + (hi - lo) * k / pieces);
    for (double e : extra)
        if (e > lo && e < hi) out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

QuadratureResult integrate_c(const Integrand2D& g, double tol, int max_depth) {
    if (g.decay == DecayClass::fold_required && !g.domain.bounded())
        fail(ErrorCode::refused_unfolded, g.name + " is only conditionally convergent; integrate its folded form");
    if (!(tol > 0)) fail(ErrorCode::invalid_argument, "tolerance must be positive");
    if (max_depth < 0) fail(ErrorCode::invalid_argument, "max_depth must be non-negative");

    std::vector<double> su, st;
    for (cplx s : g.singularities) {
        if (std::abs(s) == 0) continue;
        su.push_back(std::atan(std::abs(s)));
        for (double shift : {-2 * std::numbers::pi, 0.0, 2 * std::numbers::pi}) st.push_back(std::arg(s) + shift);
    }
    const PolarDomain& d = g.domain;
    auto us = breakpoints(0, d.u_max, 4, su), ts = breakpoints(d.theta_min, d.theta_max, 4, st);

    QuadratureResult out;
    out.method = "polar-tan-gk15";
    std::priority_queue<Panel, std::vector<Panel>, WorstFirst> open;
    std::vector<Panel> done;
    std::uint64_t next_id = 0;
    long double total_error = 0;
    auto push = [&](Panel p) {
        evaluate(g, p);
        out.nodes += 225;
        total_error += p.error;
        open.push(p);
    };
    for (std::size_t a = 0; a + 1 < us.size(); ++a)
        for (std::size_t b = 0; b + 1 < ts.size(); ++b) push({us[a], us[a + 1], ts[b], ts[b + 1], 0, next_id++});

    long double frozen_error = 0;
    while (!open.empty() && total_error > tol && frozen_error <= tol) {
        Panel p = open.top();
        open.pop();
        if (p.depth >= max_depth) {
            frozen_error += p.error;
            done.push_back(p);
            continue;
        }
        total_error -= p.error;
        double um = (p.u0 + p.u1) / 2, tm = (p.t0 + p.t1) / 2;
        push({p.u0, um, p.t0, tm, p.depth + 1, next_id++});
        push({um, p.u1, p.t0, tm, p.depth + 1, next_id++});
        push({p.u0, um, tm, p.t1, p.depth + 1, next_id++});
        push({um, p.u1, tm, p.t1, p.depth + 1, next_id++});
    }
    while (!open.empty()) {
        done.push_back(open.top());
        open.pop();
    }
    std::sort(done.begin(), done.end(), [](const Panel& a, const Panel& b) { return a.id < b.id; });
    long double value = 0, error = 0;
    for (const auto& p : done) {
        value += p.value;
        error += p.error;
    }
    out.value = static_cast<double>(value);
    out.abs_error_estimate = static_cast<double>(error);
    out.converged = out.abs_error_estimate <= tol;
    return out;
}

}  // namespace treg::quad
