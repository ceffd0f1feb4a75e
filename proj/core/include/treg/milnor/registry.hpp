#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treg/exact/polynomial.hpp"
#include "treg/milnor/factored.hpp"

namespace treg::milnor {

// A registered variety: its codimension-one components are themselves registered varieties.
struct Variety {
    std::string name;
    int dim = 0;
    std::vector<std::string> coordinates;
    std::vector<std::string> components;
    // Coordinates are algebraically independent, so random substitution decides identities.
    bool free_coordinates = false;
};

struct Factor {
    std::string name;
    std::string variety;
    std::optional<exact::Polynomial> polynomial;  // in the variety's coordinates
};

struct SteinbergPair {
    FactoredFunction f;
    FactoredFunction one_minus_f;
};

// Append-only store of varieties, irreducible factors, multiplicities and restrictions.
// Reads are safe from many threads once construction is finished.
class FactorRegistry {
public:
    void add_variety(Variety v);
    void add_factor(Factor f);
    // Sparse: an absent (factor, component) entry means multiplicity 0.
    void set_multiplicity(const std::string& factor, const std::string& component, long m);
    // (factor / pi_D^m) restricted to D, as a function on D.
    void set_restriction(const std::string& factor, const std::string& component, FactoredFunction value);
    void add_steinberg_pair(FactoredFunction f, FactoredFunction one_minus_f);

    bool has_variety(const std::string& name) const { return varieties_.count(name) != 0; }
    bool has_factor(const std::string& name) const { return factors_.count(name) != 0; }
    const Variety& variety(const std::string& name) const;
    const Factor& factor(const std::string& name) const;
    long multiplicity(const std::string& factor, const std::string& component) const;
    const FactoredFunction* restriction(const std::string& factor, const std::string& component) const;

    const std::map<std::string, Variety>& varieties() const { return varieties_; }
    const std::map<std::string, Factor>& factors() const { return factors_; }
    const std::map<std::pair<std::string, std::string>, long>& multiplicities() const { return mult_; }
    const std::map<std::pair<std::string, std::string>, FactoredFunction>& restrictions() const { return restr_; }
    const std::vector<SteinbergPair>& steinberg_pairs() const { return pairs_; }
    std::vector<std::string> factors_on(const std::string& variety) const;

    // Copy in which the local equation of `component` is replaced by u * pi; `u_restricted` is u on the component.
    FactorRegistry with_local_equation(const std::string& component, const FactoredFunction& u_restricted) const;

private:
    std::map<std::string, Variety> varieties_;
    std::map<std::string, Factor> factors_;
    std::map<std::pair<std::string, std::string>, long> mult_;
    std::map<std::pair<std::string, std::string>, FactoredFunction> restr_;
    std::vector<SteinbergPair> pairs_;
};

}  // namespace treg::milnor
