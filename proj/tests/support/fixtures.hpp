#pragma once

#include <random>
#include <string>
#include <vector>

#include "treg/elliptic/curve.hpp"
#include "treg/milnor/builders.hpp"
#include "treg/milnor/registry.hpp"

namespace treg::testing {

using milnor::FactoredFunction;
using milnor::FactorRegistry;
using exact::GaussRational;

inline std::vector<GaussRational> p1_points() {
    return {GaussRational(0), GaussRational(1), GaussRational(-1), GaussRational(2), GaussRational::i()};
}

// The product P1xP1 of the lines P1_t and P1_s, with factors t - a and s - a pulled back.
inline FactorRegistry p1_product_registry() {
    FactorRegistry reg;
    auto t = milnor::projective_line_table("P1_t", "t", p1_points());
    auto s = milnor::projective_line_table("P1_s", "s", p1_points());
    milnor::register_product(reg, "P1xP1", t, s);
    return reg;
}

inline FactorRegistry p1_line_registry() {
    FactorRegistry reg;
    milnor::register_curve(reg, milnor::projective_line_table("P1_t", "t", p1_points()));
    return reg;
}

inline elliptic::ExactCurve cubic_plus_one() { return {GaussRational(0), GaussRational(1)}; }

inline milnor::CurveTable cubic_table(const std::string& name, const std::string& x, const std::string& y) {
    auto e = cubic_plus_one();
    std::vector<milnor::LabelledPoint> pts{{"O", elliptic::ExactPoint::infinity()},
                                            {"(-1,0)", e.point(-1, 0)},
                                            {"(0,1)", e.point(0, 1)},
                                            {"(0,-1)", e.point(0, -1)},
                                            {"(2,3)", e.point(2, 3)},
                                            {"(2,-3)", e.point(2, -3)}};
    std::vector<std::pair<std::string, std::string>> factors{
        {x + "+1", x + "+1"},
        {x, x},
        {x + "-2", x + "-2"},
        {y + "-1", y + "-1"},
        {y + "+1", y + "+1"},
        {y + "-" + x + "-1", y + "-" + x + "-1"},
        {y + "+" + x + "+1", y + "+" + x + "+1"},
        {y + "-2*" + x + "+1", y + "-2*" + x + "+1"},
        {y + "+2*" + x + "-1", y + "+2*" + x + "-1"}};
    return milnor::elliptic_curve_table(name, e, {x, y}, pts, factors);
}

inline FactorRegistry cubic_registry() {
    FactorRegistry reg;
    milnor::register_curve(reg, cubic_table("E", "x", "y"));
    return reg;
}

// Random c * prod F^e over the factors of `ambient`, with up to `terms` factors.
inline FactoredFunction random_function(const FactorRegistry& reg, const std::string& ambient, std::mt19937_64& rng,
                                        int terms = 3, int max_exp = 2) {
    auto names = reg.factors_on(ambient);
    static const std::vector<GaussRational> constants{GaussRational(1), GaussRational(-1), GaussRational(2),
                                                      GaussRational(mpq_class(1, 3)), GaussRational(1, 1),
                                                      GaussRational(-5, 2)};
    FactoredFunction f = FactoredFunction::constant_on(ambient, constants[rng() % constants.size()]);
    for (int k = 0; k < terms; ++k) {
        long e = static_cast<long>(rng() % (2 * max_exp + 1)) - max_exp;
        if (e == 0) continue;
        f = f * FactoredFunction::factor(ambient, names[rng() % names.size()], e);
    }
    return f;
}

}  // namespace treg::testing
