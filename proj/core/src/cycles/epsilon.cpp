#include "treg/cycles/epsilon.hpp"

#include "treg/error.hpp"
#include "treg/milnor/evaluate.hpp"

namespace treg::cycles {

EpsilonFamily::EpsilonFamily(const milnor::FactorRegistry& reg, milnor::FactoredFunction f,
                             milnor::FactoredFunction k, double epsilon)
    : reg_(&reg), f_(std::move(f)), k_(std::move(k)), eps_(epsilon) {
    if (!(eps_ > 0)) fail(ErrorCode::invalid_argument, "epsilon must be positive");
    if (f_.ambient != k_.ambient) fail(ErrorCode::invalid_argument, "f and k live on different varieties");
}

std::complex<double> EpsilonFamily::operator()(const std::vector<std::complex<double>>& point) const {
    std::complex<double> k;
    try {
        k = milnor::eval_factored(*reg_, k_, point);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::indeterminate_value) throw;
        fail(ErrorCode::pole_of_k, "k has a pole at the sample point");
    }
    if (k == 0.0) return 1.0;
    std::complex<double> denom = k + eps_;
    if (std::abs(denom) <= 1e-15 * eps_) fail(ErrorCode::pole_of_k, "k + eps vanishes at the sample point");
    return 1.0 + (milnor::eval_factored(*reg_, f_, point) - 1.0) * k / denom;
}

}  // namespace treg::cycles
