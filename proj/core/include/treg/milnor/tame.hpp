#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treg/milnor/normal_form.hpp"
#include "treg/milnor/registry.hpp"
#include "treg/milnor/symbol.hpp"

namespace treg::milnor {

// Order of vanishing of f along the codimension-one component D of its ambient.
long valuation(const FactorRegistry& reg, const FactoredFunction& f, const std::string& component);

// (f / pi_D^nu) restricted to D; the bundle tag is carried along.
FactoredFunction residue(const FactorRegistry& reg, const FactoredFunction& f, const std::string& component);

// Components of the symbol's base on which some entry has nonzero valuation, in registry order.
std::vector<std::string> support(const FactorRegistry& reg, const MilnorSymbol& sym);

// Signed tame symbol of {f, g}: one term (D, {(-1)^(ab) f0^b / g0^a}, 1) per contributing D.
SymbolBoundary tame_symbol(const FactorRegistry& reg, const MilnorSymbol& sym);

// Higher symbol at one component: prod_j {..., j omitted, ...}^((-1)^(N-j) nu_D(s_j)).
SymbolBoundary higher_tame(const FactorRegistry& reg, const MilnorSymbol& sym, const std::string& component);
// Sum of higher_tame over every contributing component.
SymbolBoundary higher_tame_all(const FactorRegistry& reg, const MilnorSymbol& sym);

// T^(N-1) applied to every term of T^(N)(sym), before aggregation.
SymbolBoundary boundary_squared(const FactorRegistry& reg, const MilnorSymbol& sym);
// boundary_squared followed by aggregation; true iff nothing survives.
bool boundary_squared_vanishes(const FactorRegistry& reg, const MilnorSymbol& sym,
                               TorsionMode mode = TorsionMode::modulo_two_torsion);

// Product over all points of the tame symbol values of {f, g} on a curve.
GaussRational weil_reciprocity(const FactorRegistry& reg, const std::string& curve, const FactoredFunction& f,
                               const FactoredFunction& g);

enum class TrivialityRule { zero_exponent, unit_entry, steinberg_pair, negation_pair, repeated_entry, unrecognized };
std::string rule_name(TrivialityRule r);

struct SteinbergCheck {
    SymbolBoundary boundary;
    std::vector<TrivialityRule> verdicts;  // one per boundary term
    bool all_recognized() const;
};

// True if g and h are adjacent-entry Steinberg partners: h = 1 - g (registered, or by identity testing).
bool is_steinberg_pair(const FactorRegistry& reg, const FactoredFunction& g, const FactoredFunction& h,
                       std::uint64_t seed = 0x5eed);

// Requires an adjacent (f, 1-f) or (s, -s) pattern; classifies every term of T(sym).
// An adjacent (h, h) pair counts as trivial since {h, h} = {h, -1}.
SteinbergCheck steinberg_image_check(const FactorRegistry& reg, const MilnorSymbol& sym);

}  // namespace treg::milnor
