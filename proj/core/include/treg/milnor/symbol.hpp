#pragma once

#include <string>
#include <vector>

#include "treg/milnor/factored.hpp"

namespace treg::milnor {

// {s_1, ..., s_N} over a base variety. N = 0 is the unit symbol (an integer multiple of the base).
struct MilnorSymbol {
    std::vector<FactoredFunction> entries;
    std::string base;

    std::size_t length() const { return entries.size(); }
    std::string str() const;
    friend bool operator==(const MilnorSymbol&, const MilnorSymbol&) = default;
};

// exponent * symbol, supported on `component`.
struct BoundaryTerm {
    std::string component;
    MilnorSymbol symbol;
    long exponent = 1;
    friend bool operator==(const BoundaryTerm&, const BoundaryTerm&) = default;
};

// Formal sum of boundary terms (written multiplicatively for length >= 1 symbols).
struct SymbolBoundary {
    std::vector<BoundaryTerm> terms;
    bool empty() const { return terms.empty(); }
    std::string str() const;
};

MilnorSymbol make_symbol(std::string base, std::vector<FactoredFunction> entries);

}  // namespace treg::milnor
