#include "treg/milnor/builders.hpp"

#include "treg/elliptic/local_expansion.hpp"
#include "treg/error.hpp"

namespace treg::milnor {

namespace {

std::string linear_label(const std::string& coord, const GaussRational& a) {
    if (a.is_zero()) return coord;
    GaussRational m = -a;
    std::string s = m.str();
    if (!m.is_real() && sgn(m.re()) != 0) return coord + "+(" + s + ")";
    return s[0] == '-' ? coord + s : coord + "+" + s;
}

}  // namespace

CurveTable projective_line_table(const std::string& name, const std::string& coord,
                                 const std::vector<GaussRational>& finite_points) {
    CurveTable t;
    t.name = name;
    t.coordinates = {coord};
    t.free_coordinates = true;
    for (const auto& a : finite_points) t.points.push_back(coord + "=" + a.str());
    t.points.push_back(coord + "=inf");
    for (const auto& a : finite_points) {
        exact::Polynomial p = exact::Polynomial::variable(0, t.coordinates) -
                              exact::Polynomial::constant(a, t.coordinates);
        t.factors.push_back({linear_label(coord, a), p});
        std::vector<CurveTable::LocalDatum> row;
        for (const auto& b : finite_points) {
            if (a == b) row.push_back({1, GaussRational(1)});
            else row.push_back({0, b - a});
        }
        // t = 1/coord at infinity: coord - a = t^-1 (1 - a t)
        row.push_back({-1, GaussRational(1)});
        t.local.push_back(std::move(row));
    }
    return t;
}

CurveTable elliptic_curve_table(const std::string& name, const elliptic::ExactCurve& curve,
                                const std::vector<std::string>& coords, const std::vector<LabelledPoint>& points,
                                const std::vector<std::pair<std::string, std::string>>& factors) {
    if (coords.size() != 2) fail(ErrorCode::invalid_argument, "elliptic table needs two coordinate names");
    CurveTable t;
    t.name = name;
    t.coordinates = coords;
    t.free_coordinates = false;
    for (const auto& p : points) t.points.push_back(p.label);
    for (const auto& [label, text] : factors) {
        exact::Polynomial poly = exact::Polynomial::parse(text, coords);
        std::vector<CurveTable::LocalDatum> row;
        long degree = 0;
        for (const auto& p : points) {
            elliptic::LocalValue v = elliptic::local_value(curve, p.point, poly);
            row.push_back({v.valuation, v.leading});
            degree += v.valuation;
        }
        if (degree != 0)
            fail(ErrorCode::invalid_argument,
                 "factor '" + label + "' has zeros outside the listed points (divisor degree " + std::to_string(degree) + ")");
        t.factors.push_back({label, std::move(poly)});
        t.local.push_back(std::move(row));
    }
    return t;
}

void register_curve(FactorRegistry& reg, const CurveTable& t) {
    for (const auto& p : t.points) reg.add_variety({p, 0, {}, {}, false});
    reg.add_variety({t.name, 1, t.coordinates, t.points, t.free_coordinates});
    for (std::size_t f = 0; f < t.factors.size(); ++f) {
        const auto& spec = t.factors[f];
        reg.add_factor({spec.label, t.name, spec.polynomial});
        for (std::size_t p = 0; p < t.points.size(); ++p) {
            const auto& d = t.local[f][p];
            if (d.multiplicity != 0) reg.set_multiplicity(spec.label, t.points[p], d.multiplicity);
            reg.set_restriction(spec.label, t.points[p], FactoredFunction::constant_on(t.points[p], d.leading));
        }
    }
}

std::string vertical_curve_name(const std::string& point_a, const std::string& curve_b) {
    return "{" + point_a + "}x" + curve_b;
}
std::string horizontal_curve_name(const std::string& curve_a, const std::string& point_b) {
    return curve_a + "x{" + point_b + "}";
}
std::string product_point_name(const std::string& point_a, const std::string& point_b) {
    return "(" + point_a + "," + point_b + ")";
}
std::string restricted_factor_name(const std::string& factor, const std::string& point) {
    return factor + "@" + point;
}

namespace {

// Registers the fibre curve over one point of the other factor: a copy of `c` whose points are product points.
void register_fibre(FactorRegistry& reg, const std::string& fibre, const CurveTable& c, const std::string& fixed,
                    bool fixed_first) {
    std::vector<std::string> pts;
    for (const auto& p : c.points) pts.push_back(fixed_first ? product_point_name(fixed, p) : product_point_name(p, fixed));
    reg.add_variety({fibre, 1, c.coordinates, pts, c.free_coordinates});
    for (std::size_t f = 0; f < c.factors.size(); ++f) {
        std::string name = restricted_factor_name(c.factors[f].label, fixed);
        reg.add_factor({name, fibre, c.factors[f].polynomial});
        for (std::size_t p = 0; p < pts.size(); ++p) {
            const auto& d = c.local[f][p];
            if (d.multiplicity != 0) reg.set_multiplicity(name, pts[p], d.multiplicity);
            reg.set_restriction(name, pts[p], FactoredFunction::constant_on(pts[p], d.leading));
        }
    }
}

exact::Polynomial lift_polynomial(const exact::Polynomial& p, const std::vector<std::string>& vars, std::size_t offset) {
    exact::Polynomial out(vars);
    for (const auto& [mono, c] : p.terms()) {
        exact::Polynomial::Monomial m(vars.size(), 0);
        for (std::size_t k = 0; k < mono.size(); ++k) m[offset + k] = mono[k];
        out.add_term(m, c);
    }
    return out;
}

}  // namespace

void register_product(FactorRegistry& reg, const std::string& name, const CurveTable& a, const CurveTable& b) {
    std::vector<std::string> coords = a.coordinates;
    coords.insert(coords.end(), b.coordinates.begin(), b.coordinates.end());

    for (const auto& p : a.points)
        for (const auto& q : b.points) reg.add_variety({product_point_name(p, q), 0, {}, {}, false});

    std::vector<std::string> components;
    for (const auto& p : a.points) {
        components.push_back(vertical_curve_name(p, b.name));
        register_fibre(reg, components.back(), b, p, true);
    }
    for (const auto& q : b.points) {
        components.push_back(horizontal_curve_name(a.name, q));
        register_fibre(reg, components.back(), a, q, false);
    }
    reg.add_variety({name, 2, coords, components, a.free_coordinates && b.free_coordinates});

    auto pull_back = [&](const CurveTable& own, const CurveTable& other, std::size_t offset, bool own_first) {
        for (std::size_t f = 0; f < own.factors.size(); ++f) {
            const auto& spec = own.factors[f];
            reg.add_factor({spec.label, name, lift_polynomial(spec.polynomial, coords, offset)});
            // fibres over own points: constant restriction, multiplicity from the curve
            for (std::size_t p = 0; p < own.points.size(); ++p) {
                std::string comp = own_first ? vertical_curve_name(own.points[p], other.name)
                                             : horizontal_curve_name(other.name, own.points[p]);
                const auto& d = own.local[f][p];
                if (d.multiplicity != 0) reg.set_multiplicity(spec.label, comp, d.multiplicity);
                reg.set_restriction(spec.label, comp, FactoredFunction::constant_on(comp, d.leading));
            }
            // fibres over the other factor's points: the factor itself
            for (const auto& q : other.points) {
                std::string comp = own_first ? horizontal_curve_name(own.name, q) : vertical_curve_name(q, own.name);
                reg.set_restriction(spec.label, comp, FactoredFunction::factor(comp, restricted_factor_name(spec.label, q)));
            }
        }
    };
    pull_back(a, b, 0, true);
    pull_back(b, a, a.coordinates.size(), false);
}

}  // namespace treg::milnor
