#include "treg/quad/integrand.hpp"

#include <cmath>

#include "treg/error.hpp"

namespace treg::quad {

namespace {

constexpr cplx I{0, 1};

double log_abs(cplx z) { return std::log(std::abs(z)); }

double cube(double r) { return r * r * r; }

void check_pair(int i, int j) {
    if (i < 1 || i > 2 || j < 1 || j > 2)
        fail(ErrorCode::invalid_argument, "integrand indices must be 1 or 2");
}

std::string case_name(int i, int j) { return "eta" + std::to_string(i) + "-f" + std::to_string(j); }

}  // namespace

std::string decay_name(DecayClass d) {
    return d == DecayClass::fold_required ? "fold-required" : "absolutely-integrable";
}

std::string symmetry_name(Symmetry s) {
    switch (s) {
    case Symmetry::none: return "none";
    case Symmetry::odd_in_im: return "odd-in-Im";
    case Symmetry::odd_in_re: return "odd-in-Re";
    case Symmetry::fold_upper_half: return "fold-upper-half";
    case Symmetry::fold_right_half: return "fold-right-half";
    }
    return "none";
}

PolarDomain PolarDomain::disk(double radius) {
    if (!(radius > 0)) fail(ErrorCode::invalid_argument, "disk radius must be positive");
    return {-std::numbers::pi, std::numbers::pi, std::atan(radius)};
}

cplx Integrand2D::reflect(cplx x) const {
    switch (symmetry) {
    case Symmetry::odd_in_im:
    case Symmetry::fold_upper_half: return std::conj(x);
    case Symmetry::odd_in_re:
    case Symmetry::fold_right_half: return -std::conj(x);
    case Symmetry::none: break;
    }
    return x;
}

Integrand2D theorem_integrand(int i, int j) {
    check_pair(i, j);
    Integrand2D g;
    g.name = case_name(i, j);
    if (i == 1 && j == 1) {
        g.eval = [](cplx x) { return (log_abs(x + I) - log_abs(x - I)) * 2 * x.imag() / cube(std::abs(x)); };
        g.singularities = {I};
        g.symmetry = Symmetry::fold_upper_half;
        g.domain = PolarDomain::upper_half();
    } else if (i == 2 && j == 2) {
        g.eval = [](cplx x) { return (log_abs(x + 1.0) - log_abs(x - 1.0)) * 2 * x.real() / cube(std::abs(x)); };
        g.singularities = {1.0};
        g.symmetry = Symmetry::fold_right_half;
        g.domain = PolarDomain::right_half();
    } else if (i == 1) {
        // w_1 is odd under x -> conj(x) while |x + 1| is even
        g.eval = [](cplx x) {
            return -2 * x.imag() / cube(std::abs(x)) * (log_abs(x + 1.0) - log_abs(std::conj(x) + 1.0));
        };
        g.symmetry = Symmetry::odd_in_im;
        g.domain = PolarDomain::upper_half();
    } else {
        g.eval = [](cplx x) {
            return 2 * x.real() / cube(std::abs(x)) * (log_abs(x + I) - log_abs(-std::conj(x) + I));
        };
        g.symmetry = Symmetry::odd_in_re;
        g.domain = PolarDomain::right_half();
    }
    return g;
}

Integrand2D unfolded_integrand(int i, int j) {
    check_pair(i, j);
    Integrand2D g;
    g.name = case_name(i, j) + "-unfolded";
    const cplx root = j == 1 ? -I : cplx(-1);
    auto weight = i == 1 ? std::function<double(cplx)>([](cplx x) { return -2 * x.imag() / cube(std::abs(x)); })
                         : std::function<double(cplx)>([](cplx x) { return 2 * x.real() / cube(std::abs(x)); });
    g.eval = [weight, root](cplx x) { return weight(x) * log_abs(x - root); };
    g.singularities = {root};
    g.decay = DecayClass::fold_required;
    if (i == 1) g.symmetry = j == 1 ? Symmetry::fold_upper_half : Symmetry::odd_in_im;
    else g.symmetry = j == 2 ? Symmetry::fold_right_half : Symmetry::odd_in_re;
    g.domain = PolarDomain::plane();
    return g;
}

Integrand2D constant_integrand(double c, PolarDomain domain) {
    Integrand2D g;
    g.name = "constant";
    g.eval = [c](cplx) { return c; };
    g.domain = domain;
    return g;
}

Integrand2D integrand_for_case(const std::string& id) {
    if (id == "disk-unit") {
        auto g = constant_integrand(1.0, PolarDomain::disk(1.0));
        g.name = id;
        return g;
    }
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            if (id == case_name(i, j)) return theorem_integrand(i, j);
    fail(ErrorCode::invalid_argument, "unknown integration case '" + id + "'");
}

std::vector<std::string> case_ids() { return {"eta1-f1", "eta1-f2", "eta2-f1", "eta2-f2", "disk-unit"}; }

std::function<double(double)> r22_path_integrand(Holomorphic f, Holomorphic df, Holomorphic g, Holomorphic dg,
                                                 std::function<cplx(double)> gamma,
                                                 std::function<cplx(double)> dgamma) {
    return [=](double t) {
        cplx z = gamma(t), dz = dgamma(t);
        cplx fz = f(z), gz = g(z);
        // d log|h| along the path is Re(h'/h dz)
        double dlog_f = std::real(df(z) / fz * dz), dlog_g = std::real(dg(z) / gz * dz);
        return log_abs(fz) * dlog_g - log_abs(gz) * dlog_f;
    };
}

}  // namespace treg::quad
