#include "treg/milnor/factored.hpp"

#include <sstream>

#include "treg/error.hpp"

namespace treg::milnor {

BundleTag bundle_product(const BundleTag& a, const BundleTag& b) {
    BundleTag out = a;
    for (const auto& [k, e] : b) {
        long v = (out[k] += e);
        if (v == 0) out.erase(k);
    }
    return out;
}

BundleTag bundle_power(const BundleTag& a, long n) {
    BundleTag out;
    if (n == 0) return out;
    for (const auto& [k, e] : a) out[k] = e * n;
    return out;
}

std::string bundle_str(const BundleTag& tag) {
    if (tag.empty()) return "O";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, e] : tag) {
        if (!first) os << "(x)";
        os << k;
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

FactoredFunction FactoredFunction::constant_on(std::string ambient, GaussRational c) {
    if (c.is_zero()) fail(ErrorCode::invalid_argument, "factored function with zero constant");
    FactoredFunction f;
    f.constant = std::move(c);
    f.ambient = std::move(ambient);
    return f;
}

FactoredFunction FactoredFunction::factor(std::string ambient, const std::string& name, long exponent) {
    FactoredFunction f;
    f.ambient = std::move(ambient);
    if (exponent != 0) f.exponents[name] = exponent;
    return f;
}

FactoredFunction FactoredFunction::inverse() const { return pow(-1); }

FactoredFunction FactoredFunction::pow(long n) const {
    FactoredFunction out;
    out.ambient = ambient;
    out.constant = constant.pow(n);
    if (n != 0)
        for (const auto& [k, e] : exponents) out.exponents[k] = e * n;
    out.bundle = bundle_power(bundle, n);
    return out;
}

FactoredFunction FactoredFunction::operator-() const {
    FactoredFunction out = *this;
    out.constant = -constant;
    return out;
}

FactoredFunction FactoredFunction::operator*(const FactoredFunction& o) const {
    if (ambient != o.ambient)
        fail(ErrorCode::invalid_argument, "product of functions on '" + ambient + "' and '" + o.ambient + "'");
    FactoredFunction out = *this;
    out.constant *= o.constant;
    for (const auto& [k, e] : o.exponents) {
        long v = (out.exponents[k] += e);
        if (v == 0) out.exponents.erase(k);
    }
    out.bundle = bundle_product(bundle, o.bundle);
    return out;
}

std::string FactoredFunction::str() const {
    std::ostringstream os;
    bool need_const = !constant.is_one() || exponents.empty();
    if (need_const) os << (constant.is_real() ? constant.str() : "(" + constant.str() + ")");
    for (const auto& [k, e] : exponents) {
        if (need_const) os << "*";
        need_const = true;
        os << "[" << k << "]";
        if (e != 1) os << "^" << e;
    }
    if (!bundle.empty()) os << " in " << bundle_str(bundle);
    return os.str();
}

}  // namespace treg::milnor
