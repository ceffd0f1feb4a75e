#pragma once

#include <string>
#include <vector>

#include "treg/elliptic/curve.hpp"
#include "treg/milnor/registry.hpp"

namespace treg::milnor {

// Local data of a family of factors at the labelled points of a smooth projective curve.
struct CurveTable {
    struct LocalDatum {
        long multiplicity = 0;
        GaussRational leading{1};
    };
    struct FactorSpec {
        std::string label;
        exact::Polynomial polynomial;
    };

    std::string name;
    std::vector<std::string> coordinates;
    bool free_coordinates = false;
    std::vector<std::string> points;
    std::vector<FactorSpec> factors;
    std::vector<std::vector<LocalDatum>> local;  // [factor][point]
};

// P^1 with coordinate `coord`; factors coord - a for each finite a, points the a's and infinity.
CurveTable projective_line_table(const std::string& name, const std::string& coord,
                                 const std::vector<GaussRational>& finite_points);

struct LabelledPoint {
    std::string label;
    elliptic::ExactPoint point;
};

// Elliptic curve with factor polynomials written in `coords` = {x-name, y-name}; local data from exact charts.
CurveTable elliptic_curve_table(const std::string& name, const elliptic::ExactCurve& curve,
                                const std::vector<std::string>& coords, const std::vector<LabelledPoint>& points,
                                const std::vector<std::pair<std::string, std::string>>& factors);

// Registers the curve, its points and its factors.
void register_curve(FactorRegistry& reg, const CurveTable& t);

// Registers A x B: vertical curves {p} x B, horizontal curves A x {q}, points (p,q), pulled-back factors
// and their restrictions to every curve.
void register_product(FactorRegistry& reg, const std::string& name, const CurveTable& a, const CurveTable& b);

std::string vertical_curve_name(const std::string& point_a, const std::string& curve_b);
std::string horizontal_curve_name(const std::string& curve_a, const std::string& point_b);
std::string product_point_name(const std::string& point_a, const std::string& point_b);
std::string restricted_factor_name(const std::string& factor, const std::string& point);

}  // namespace treg::milnor
