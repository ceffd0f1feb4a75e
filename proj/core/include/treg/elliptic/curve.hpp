#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "treg/elliptic/field.hpp"
#include "treg/elliptic/lattice.hpp"
#include "treg/error.hpp"

namespace treg::elliptic {

struct Infinity {
    friend bool operator==(const Infinity&, const Infinity&) { return true; }
};

template <class F>
struct Affine {
    F x;
    F y;
};

template <class F>
class CurvePoint {
public:
    CurvePoint() : v_(Infinity{}) {}
    static CurvePoint infinity() { return CurvePoint(); }
    static CurvePoint affine(F x, F y) { return CurvePoint(Affine<F>{std::move(x), std::move(y)}); }

    bool is_infinity() const { return std::holds_alternative<Infinity>(v_); }
    const F& x() const { return std::get<Affine<F>>(v_).x; }
    const F& y() const { return std::get<Affine<F>>(v_).y; }

    bool same_as(const CurvePoint& o, double eps) const {
        if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
        return FieldOps<F>::equal(x(), o.x(), eps) && FieldOps<F>::equal(y(), o.y(), eps);
    }

private:
    explicit CurvePoint(Affine<F> a) : v_(std::move(a)) {}
    std::variant<Infinity, Affine<F>> v_;
};

// y^2 = x^3 + b x + c, optionally carrying an analytic lattice.
template <class F>
class EllipticCurve {
public:
    EllipticCurve(F b, F c, std::optional<Lattice> lattice = std::nullopt, double eps_curve = 1e-10)
        : b_(std::move(b)), c_(std::move(c)), lattice_(std::move(lattice)), eps_(eps_curve) {
        if (FieldOps<F>::is_zero(discriminant(), eps_))
            fail(ErrorCode::singular_curve, "discriminant vanishes; use EllipticCurve::degeneration");
        if (lattice_) lattice_->validate();
    }

    // Singular member of the family (for example y^2 = x^3); the group law is disabled.
    static EllipticCurve degeneration(F b, F c) {
        EllipticCurve e;
        e.b_ = std::move(b);
        e.c_ = std::move(c);
        e.degenerate_ = true;
        return e;
    }

    const F& b() const { return b_; }
    const F& c() const { return c_; }
    bool degenerate() const { return degenerate_; }
    const std::optional<Lattice>& lattice() const { return lattice_; }
    double eps_curve() const { return eps_; }

    F discriminant() const {
        F four(4), twenty_seven(27), minus_sixteen(-16);
        return minus_sixteen * (four * b_ * b_ * b_ + twenty_seven * c_ * c_);
    }
    F rhs(const F& x) const { return x * x * x + b_ * x + c_; }

    bool contains(const CurvePoint<F>& p) const {
        if (p.is_infinity()) return true;
        F lhs = p.y() * p.y();
        return FieldOps<F>::equal(lhs, rhs(p.x()), eps_);
    }

    CurvePoint<F> point(F x, F y) const {
        auto p = CurvePoint<F>::affine(std::move(x), std::move(y));
        if (!contains(p)) fail(ErrorCode::point_not_on_curve, "point does not satisfy the curve equation");
        return p;
    }

private:
    EllipticCurve() = default;
    F b_{};
    F c_{};
    std::optional<Lattice> lattice_;
    double eps_ = 1e-10;
    bool degenerate_ = false;
};

template <class F>
void require_group_law(const EllipticCurve<F>& e) {
    if (e.degenerate()) fail(ErrorCode::singular_curve, "group law is disabled on a degenerate curve");
}

template <class F>
CurvePoint<F> negate(const EllipticCurve<F>& e, const CurvePoint<F>& p) {
    require_group_law(e);
    if (p.is_infinity()) return p;
    return CurvePoint<F>::affine(p.x(), -p.y());
}

// Chord-tangent law with O as identity.
template <class F>
CurvePoint<F> add_points(const EllipticCurve<F>& e, const CurvePoint<F>& p, const CurvePoint<F>& q) {
    require_group_law(e);
    if (!e.contains(p) || !e.contains(q)) fail(ErrorCode::point_not_on_curve, "operand is not on the curve");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const double eps = e.eps_curve();
    F lambda;
    if (FieldOps<F>::equal(p.x(), q.x(), eps)) {
        if (FieldOps<F>::is_zero(p.y() + q.y(), eps)) return CurvePoint<F>::infinity();
        F three(3), two(2);
        lambda = (three * p.x() * p.x() + e.b()) / (two * p.y());
    } else {
        lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    F x3 = lambda * lambda - p.x() - q.x();
    F y3 = lambda * (p.x() - x3) - p.y();
    return CurvePoint<F>::affine(std::move(x3), std::move(y3));
}

template <class F>
CurvePoint<F> multiply(const EllipticCurve<F>& e, CurvePoint<F> p, long n) {
    require_group_law(e);
    if (n < 0) {
        p = negate(e, p);
        n = -n;
    }
    CurvePoint<F> acc = CurvePoint<F>::infinity();
    while (n) {
        if (n & 1) acc = add_points(e, acc, p);
        p = add_points(e, p, p);
        n >>= 1;
    }
    return acc;
}

// Formal finite sum of points with integer multiplicities.
template <class F>
class PointDivisor {
public:
    using Term = std::pair<CurvePoint<F>, long>;

    explicit PointDivisor(double eps = 1e-10) : eps_(eps) {}
    PointDivisor(std::initializer_list<Term> terms, double eps = 1e-10) : eps_(eps) {
        for (const auto& [p, n] : terms) add(p, n);
    }

    void add(const CurvePoint<F>& p, long n) {
        for (auto it = terms_.begin(); it != terms_.end(); ++it)
            if (it->first.same_as(p, eps_)) {
                it->second += n;
                if (it->second == 0) terms_.erase(it);
                return;
            }
        if (n != 0) terms_.emplace_back(p, n);
    }

    PointDivisor operator+(const PointDivisor& o) const {
        PointDivisor out = *this;
        for (const auto& [p, n] : o.terms_) out.add(p, n);
        return out;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    long degree() const {
        long d = 0;
        for (const auto& t : terms_) d += t.second;
        return d;
    }

private:
    std::vector<Term> terms_;
    double eps_;
};

// Abel-Jacobi sum of a degree-zero divisor.
template <class F>
CurvePoint<F> divisor_class_point(const EllipticCurve<F>& e, const PointDivisor<F>& d) {
    if (d.degree() != 0) fail(ErrorCode::nonzero_degree, "divisor degree is " + std::to_string(d.degree()));
    CurvePoint<F> acc = CurvePoint<F>::infinity();
    for (const auto& [p, n] : d.terms()) acc = add_points(e, acc, multiply(e, p, n));
    return acc;
}

template <class F>
bool is_principal(const EllipticCurve<F>& e, const PointDivisor<F>& d) {
    if (d.degree() != 0) return false;
    return divisor_class_point(e, d).is_infinity();
}

using ExactCurve = EllipticCurve<exact::GaussRational>;
using ExactPoint = CurvePoint<exact::GaussRational>;
using ExactDivisor = PointDivisor<exact::GaussRational>;
using ComplexCurve = EllipticCurve<cplx>;
using ComplexPoint = CurvePoint<cplx>;
using ComplexDivisor = PointDivisor<cplx>;

}  // namespace treg::elliptic
