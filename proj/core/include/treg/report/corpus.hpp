#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "treg/cycles/facts.hpp"
#include "treg/cycles/form.hpp"
#include "treg/cycles/ledger.hpp"
#include "treg/elliptic/flat_norm.hpp"
#include "treg/milnor/normal_form.hpp"
#include "treg/milnor/registry.hpp"
#include "treg/milnor/symbol.hpp"
#include "treg/quad/pairing.hpp"

namespace treg::report {

inline constexpr int schema_version = 1;

// Expected boundary of a symbol: the full tame symbol, or the higher symbol at one component.
struct SymbolGolden {
    std::string id;
    milnor::MilnorSymbol symbol;
    std::optional<std::string> component;
    milnor::SymbolBoundary expected;
    milnor::TorsionMode mode = milnor::TorsionMode::exact;
};

struct BoundaryCase {
    std::string id;
    milnor::MilnorSymbol symbol;
    milnor::TorsionMode mode = milnor::TorsionMode::modulo_two_torsion;
};

struct ReciprocityCase {
    std::string id;
    std::string curve;
    milnor::FactoredFunction f, g;
};

// eta1 or eta2 on the 1-based factor pair (a, b).
struct FormFactor {
    std::string kind;
    std::size_t a = 1, b = 2;
};

struct CompletionInstance {
    std::string id;
    std::string method;  // "product" or "hyperplane"
    cycles::Ambient ambient;
    cycles::Precycle input;
    cycles::FactRegistry facts;
    std::vector<FormFactor> form;  // wedge of the listed factors; empty means no filter

    cycles::FormDescriptor form_descriptor() const;
};

// One ledger term whose section has a flat norm read off a single factor.
struct CupProductTerm {
    long coefficient = 1;
    cycles::SubvarietyDescriptor variety;
    std::string section;
    std::size_t factor = 0;  // 0-based coordinate the norm reads
    elliptic::AnalyticDivisor divisor;
    double offset = 0;
    quad::Intersection meets;
};

struct CupProductInstance {
    std::string id;
    cycles::Ambient ambient;
    std::vector<elliptic::Lattice> lattices;  // one per factor
    std::vector<CupProductTerm> terms;

    cycles::Ledger ledger() const;
};

struct HarmonicityInstance {
    std::string id;
    elliptic::Lattice lattice;
    elliptic::AnalyticDivisor divisor;
    int na = 8, nb = 8;
    std::vector<double> steps;
};

struct Corpus {
    std::string name;
    milnor::FactorRegistry registry;
    std::vector<SymbolGolden> tame;
    std::vector<SymbolGolden> higher_tame;
    std::vector<BoundaryCase> boundary_squared;
    std::vector<ReciprocityCase> reciprocity;
    std::vector<CompletionInstance> completions;
    std::vector<CupProductInstance> cup_products;
    std::vector<HarmonicityInstance> harmonicity;

    const CompletionInstance& completion(const std::string& id) const;
};

// Throws schema-invalid on malformed JSON, a wrong schema_version, unknown fields or
// references to unregistered varieties, factors or components.
Corpus parse_corpus(const std::string& text);
Corpus load_corpus(const std::filesystem::path& path);
std::string write_corpus(const Corpus& corpus);

}  // namespace treg::report
