#include "treg/milnor/registry.hpp"

#include "treg/error.hpp"

namespace treg::milnor {

void FactorRegistry::add_variety(Variety v) {
    if (v.name.empty()) fail(ErrorCode::schema_invalid, "variety without a name");
    if (varieties_.count(v.name)) fail(ErrorCode::schema_invalid, "variety '" + v.name + "' registered twice");
    if (v.dim < 0) fail(ErrorCode::schema_invalid, "variety '" + v.name + "' has negative dimension");
    std::string name = v.name;
    varieties_.emplace(std::move(name), std::move(v));
}

void FactorRegistry::add_factor(Factor f) {
    if (factors_.count(f.name)) fail(ErrorCode::schema_invalid, "factor '" + f.name + "' registered twice");
    const Variety& v = variety(f.variety);
    if (f.polynomial && f.polynomial->variables() != v.coordinates)
        fail(ErrorCode::schema_invalid, "factor '" + f.name + "' is not written in the coordinates of '" + v.name + "'");
    std::string name = f.name;
    factors_.emplace(std::move(name), std::move(f));
}

void FactorRegistry::set_multiplicity(const std::string& f, const std::string& component, long m) {
    const Factor& fac = factor(f);
    const Variety& amb = variety(fac.variety);
    bool found = false;
    for (const auto& c : amb.components) found = found || c == component;
    if (!found)
        fail(ErrorCode::unregistered_component, "'" + component + "' is not a component of '" + amb.name + "'");
    auto [it, inserted] = mult_.emplace(std::make_pair(f, component), m);
    if (!inserted && it->second != m)
        fail(ErrorCode::schema_invalid, "conflicting multiplicity for (" + f + ", " + component + ")");
}

void FactorRegistry::set_restriction(const std::string& f, const std::string& component, FactoredFunction value) {
    factor(f);
    if (value.ambient != component)
        fail(ErrorCode::schema_invalid, "restriction of '" + f + "' to '" + component + "' lives on '" + value.ambient + "'");
    for (const auto& [name, e] : value.exponents) {
        const Factor& g = factor(name);
        if (g.variety != component)
            fail(ErrorCode::schema_invalid, "restriction of '" + f + "' uses factor '" + name + "' from another variety");
    }
    auto key = std::make_pair(f, component);
    if (restr_.count(key)) fail(ErrorCode::schema_invalid, "restriction (" + f + ", " + component + ") registered twice");
    restr_.emplace(std::move(key), std::move(value));
}

void FactorRegistry::add_steinberg_pair(FactoredFunction f, FactoredFunction one_minus_f) {
    if (f.ambient != one_minus_f.ambient) fail(ErrorCode::schema_invalid, "Steinberg pair across different varieties");
    pairs_.push_back({std::move(f), std::move(one_minus_f)});
}

const Variety& FactorRegistry::variety(const std::string& name) const {
    auto it = varieties_.find(name);
    if (it == varieties_.end()) fail(ErrorCode::unregistered_component, "variety '" + name + "' is not registered");
    return it->second;
}

const Factor& FactorRegistry::factor(const std::string& name) const {
    auto it = factors_.find(name);
    if (it == factors_.end()) fail(ErrorCode::schema_invalid, "factor '" + name + "' is not registered");
    return it->second;
}

long FactorRegistry::multiplicity(const std::string& f, const std::string& component) const {
    auto it = mult_.find({f, component});
    return it == mult_.end() ? 0 : it->second;
}

const FactoredFunction* FactorRegistry::restriction(const std::string& f, const std::string& component) const {
    auto it = restr_.find({f, component});
    return it == restr_.end() ? nullptr : &it->second;
}

std::vector<std::string> FactorRegistry::factors_on(const std::string& v) const {
    std::vector<std::string> out;
    for (const auto& [name, f] : factors_)
        if (f.variety == v) out.push_back(name);
    return out;
}

FactorRegistry FactorRegistry::with_local_equation(const std::string& component, const FactoredFunction& u) const {
    if (u.ambient != component) fail(ErrorCode::invalid_argument, "unit must live on the component");
    FactorRegistry out = *this;
    for (auto& [key, value] : out.restr_) {
        if (key.second != component) continue;
        long m = multiplicity(key.first, component);
        if (m != 0) value = value * u.pow(-m);
    }
    return out;
}

}  // namespace treg::milnor
