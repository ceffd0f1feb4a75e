#pragma once

#include <map>
#include <string>
#include <vector>

#include "treg/milnor/symbol.hpp"

namespace treg::milnor {

// modulo_two_torsion works with coefficients in Z[1/2]: signs and other roots of unity drop out,
// and constants are expanded over Gaussian primes so constant symbols compare canonically.
enum class TorsionMode { exact, modulo_two_torsion };

// Aggregated class of a boundary on one component, after multilinear expansion of every
// symbol over its atoms (factor names and constants), antisymmetric sorting and
// {a, a} = {a, -1}.
struct ComponentClass {
    long degree = 0;                                           // length-0 symbols
    std::map<std::vector<std::string>, long> factor_terms;     // {F_1, ..., F_m}, sorted names
    std::map<std::vector<std::string>, GaussRational> scaled;  // {c, F_1, ..., F_(m-1)} folded into c
    std::map<std::vector<std::string>, long> constant_terms;   // two or more constant atoms, kept formal

    bool empty() const { return degree == 0 && factor_terms.empty() && scaled.empty() && constant_terms.empty(); }
    friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

using NormalForm = std::map<std::string, ComponentClass>;

NormalForm normalize(const SymbolBoundary& b, TorsionMode mode);
bool is_zero(const SymbolBoundary& b, TorsionMode mode);
std::string describe(const NormalForm& nf);

}  // namespace treg::milnor
