#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "treg/exact/gauss_rational.hpp"

namespace treg::elliptic {

// Zero/equality tests per scalar type: exact for Q(i), tolerance-based for doubles.
template <class F>
struct FieldOps;

template <>
struct FieldOps<exact::GaussRational> {
    static bool is_zero(const exact::GaussRational& v, double) { return v.is_zero(); }
    static bool equal(const exact::GaussRational& a, const exact::GaussRational& b, double) { return a == b; }
    static bool less(const exact::GaussRational& a, const exact::GaussRational& b) { return a < b; }
    static std::complex<double> to_complex(const exact::GaussRational& v) { return v.to_complex(); }
};

template <>
struct FieldOps<std::complex<double>> {
    static bool is_zero(const std::complex<double>& v, double eps) { return std::abs(v) <= eps; }
    static bool equal(const std::complex<double>& a, const std::complex<double>& b, double eps) {
        return std::abs(a - b) <= eps * (1.0 + std::max(std::abs(a), std::abs(b)));
    }
    static bool less(const std::complex<double>& a, const std::complex<double>& b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    }
    static std::complex<double> to_complex(const std::complex<double>& v) { return v; }
};

}  // namespace treg::elliptic
