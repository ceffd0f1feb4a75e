#pragma once

#include "treg/elliptic/curve.hpp"
#include "treg/exact/laurent.hpp"
#include "treg/exact/polynomial.hpp"

namespace treg::elliptic {

// x and y as Laurent series in a uniformizer t at a point:
//   t = x - x0 at an ordinary affine point, t = y at a point with y0 = 0, t = x/y at O.
struct LocalChart {
    exact::Laurent x;
    exact::Laurent y;
};

LocalChart local_chart(const ExactCurve& e, const ExactPoint& p, int precision = 16);

struct LocalValue {
    long valuation;
    exact::GaussRational leading;  // (F / t^valuation) at the point
};

// Order and leading coefficient of a polynomial F(x, y) at p; variables of F are (x, y) in that order.
LocalValue local_value(const ExactCurve& e, const ExactPoint& p, const exact::Polynomial& f, int precision = 16);

}  // namespace treg::elliptic
