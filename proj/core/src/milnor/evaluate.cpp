#include "treg/milnor/evaluate.hpp"

#include "treg/error.hpp"

namespace treg::milnor {

namespace {

const exact::Polynomial& polynomial_of(const FactorRegistry& reg, const std::string& name, const FactoredFunction& f) {
    const Factor& fac = reg.factor(name);
    if (fac.variety != f.ambient)
        fail(ErrorCode::invalid_argument, "factor '" + name + "' does not live on '" + f.ambient + "'");
    if (!fac.polynomial) fail(ErrorCode::invalid_argument, "factor '" + name + "' has no evaluation polynomial");
    return *fac.polynomial;
}

}  // namespace

std::complex<double> eval_factored(const FactorRegistry& reg, const FactoredFunction& f,
                                   const std::vector<std::complex<double>>& point) {
    std::complex<double> acc = f.constant.to_complex();
    int zero_balance = 0;
    for (const auto& [name, e] : f.exponents) {
        std::complex<double> v = polynomial_of(reg, name, f).evaluate(point);
        if (v == 0.0) {
            if (e < 0) fail(ErrorCode::indeterminate_value, "factor '" + name + "' vanishes with negative exponent");
            ++zero_balance;
            continue;
        }
        acc *= std::pow(v, static_cast<int>(e));
    }
    return zero_balance ? std::complex<double>(0) : acc;
}

GaussRational eval_factored_exact(const FactorRegistry& reg, const FactoredFunction& f,
                                  const std::vector<GaussRational>& point) {
    GaussRational acc = f.constant;
    bool zero = false;
    for (const auto& [name, e] : f.exponents) {
        GaussRational v = polynomial_of(reg, name, f).evaluate(point);
        if (v.is_zero()) {
            if (e < 0) fail(ErrorCode::indeterminate_value, "factor '" + name + "' vanishes with negative exponent");
            zero = true;
            continue;
        }
        acc *= v.pow(e);
    }
    return zero ? GaussRational(0) : acc;
}

}  // namespace treg::milnor
