#pragma once

#include <map>
#include <string>

#include "treg/exact/gauss_rational.hpp"

namespace treg::milnor {

using exact::GaussRational;

// Flat line bundle as a formal product of named generators; empty means trivial.
using BundleTag = std::map<std::string, long>;

BundleTag bundle_product(const BundleTag& a, const BundleTag& b);
BundleTag bundle_power(const BundleTag& a, long n);
std::string bundle_str(const BundleTag& tag);

// constant * prod factor^exponent on a named ambient variety, optionally a section of a flat bundle.
struct FactoredFunction {
    GaussRational constant{1};
    std::map<std::string, long> exponents;  // zero exponents never stored
    std::string ambient;
    BundleTag bundle;

    static FactoredFunction constant_on(std::string ambient, GaussRational c);
    static FactoredFunction factor(std::string ambient, const std::string& name, long exponent = 1);

    bool is_constant() const { return exponents.empty(); }
    bool is_rational_function() const { return bundle.empty(); }
    bool is_unit_constant() const { return is_constant() && (constant.is_one() || constant.is_minus_one()); }

    FactoredFunction inverse() const;
    FactoredFunction pow(long n) const;
    FactoredFunction operator-() const;
    FactoredFunction operator*(const FactoredFunction& o) const;
    FactoredFunction operator/(const FactoredFunction& o) const { return *this * o.inverse(); }

    friend bool operator==(const FactoredFunction& a, const FactoredFunction& b) {
        return a.constant == b.constant && a.exponents == b.exponents && a.ambient == b.ambient && a.bundle == b.bundle;
    }

    std::string str() const;
};

}  // namespace treg::milnor
