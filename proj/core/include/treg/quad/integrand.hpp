#pragma once

#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace treg::quad {

using cplx = std::complex<double>;

enum class DecayClass { absolutely_integrable, fold_required };
enum class Symmetry { none, odd_in_im, odd_in_re, fold_upper_half, fold_right_half };

std::string decay_name(DecayClass d);
std::string symmetry_name(Symmetry s);

// Sector of the plane in polar coordinates with r = tan(u), u in (0, u_max).
struct PolarDomain {
    double theta_min = -std::numbers::pi;
    double theta_max = std::numbers::pi;
    double u_max = std::numbers::pi / 2;

    bool bounded() const { return u_max < std::numbers::pi / 2; }
    static PolarDomain plane() { return {}; }
    static PolarDomain upper_half() { return {0, std::numbers::pi}; }
    static PolarDomain right_half() { return {-std::numbers::pi / 2, std::numbers::pi / 2}; }
    static PolarDomain disk(double radius);
};

// Real integrand against Lebesgue measure dA on a polar domain.
struct Integrand2D {
    std::string name;
    std::function<double(cplx)> eval;  // pure; finite off `singularities`
    std::vector<cplx> singularities;
    DecayClass decay = DecayClass::absolutely_integrable;
    Symmetry symmetry = Symmetry::none;
    PolarDomain domain;

    // Image of x under the reflection attached to the symmetry tag (x itself for `none`).
    cplx reflect(cplx x) const;
};

// Folded integrand for the pair (eta_i, log|f_j|), i, j in {1, 2}, with f_1 = x + i and f_2 = x + 1.
//   (1,1): (log|x+i| - log|x-i|) 2 Im x / |x|^3 on the upper half plane
//   (2,2): (log|x+1| - log|x-1|) 2 Re x / |x|^3 on the right half plane
//   (1,2), (2,1): the folded form of an odd integrand, identically zero.
Integrand2D theorem_integrand(int i, int j);

// w_i(x) log|f_j(x)| over the whole plane, w_1 = -2 Im x / |x|^3, w_2 = 2 Re x / |x|^3.
// Only conditionally convergent at infinity.
Integrand2D unfolded_integrand(int i, int j);

Integrand2D constant_integrand(double c, PolarDomain domain);

// Case ids "eta1-f1", "eta1-f2", "eta2-f1", "eta2-f2", "disk-unit".
Integrand2D integrand_for_case(const std::string& id);
std::vector<std::string> case_ids();

// log|f| dlog|g| - log|g| dlog|f| pulled back along gamma: [a, b] -> C, as a function of the parameter.
using Holomorphic = std::function<cplx(cplx)>;
std::function<double(double)> r22_path_integrand(Holomorphic f, Holomorphic df, Holomorphic g, Holomorphic dg,
                                                 std::function<cplx(double)> gamma,
                                                 std::function<cplx(double)> dgamma);

}  // namespace treg::quad
