#include "treg/milnor/symbol.hpp"

#include <sstream>

#include "treg/error.hpp"

namespace treg::milnor {

MilnorSymbol make_symbol(std::string base, std::vector<FactoredFunction> entries) {
    for (const auto& e : entries)
        if (e.ambient != base)
            fail(ErrorCode::invalid_argument, "symbol entry on '" + e.ambient + "' but base is '" + base + "'");
    return {std::move(entries), std::move(base)};
}

std::string MilnorSymbol::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? ", " : "") << entries[i].str();
    os << "} on " << base;
    return os.str();
}

std::string SymbolBoundary::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        os << (i ? " + " : "") << t.exponent << "*(" << t.component << ", ";
        if (t.symbol.entries.empty()) os << "1";
        else {
            os << "{";
            for (std::size_t k = 0; k < t.symbol.entries.size(); ++k)
                os << (k ? ", " : "") << t.symbol.entries[k].str();
            os << "}";
        }
        os << ")";
    }
    return os.str();
}

}  // namespace treg::milnor
