#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treg/cycles/ledger.hpp"

namespace treg::cycles {

// Existence statements the completions consume without proving them.
enum class FactKind {
    hvc_equivalence,                // subject A: a section beta on `carrier` with div = A - hvc
    generic_hyperplane_irreducible, // subject Z: the hyperplane meets Z irreducibly
    picard_restriction,             // subject Z: horizontal/vertical cycles pull back to Z as such
    bertini_curve,                  // subjects two points: a smooth curve through both, `carrier` = curve x rest
    rational_equivalence,           // subjects two moving parts: rationally equivalent on `carrier`
    degree_zero_flat_bundle,        // subject a factor curve: degree-zero divisors are flat-bundle divisors
};

std::string fact_kind_name(FactKind k);
std::optional<FactKind> parse_fact_kind(const std::string& s);

struct RegistryFact {
    FactKind kind = FactKind::degree_zero_flat_bundle;
    std::vector<std::string> subjects;
    std::optional<SubvarietyDescriptor> carrier;
    FormalDivisor hvc;
    std::optional<std::string> base_point;

    std::string id() const;
};

std::string fact_id(FactKind k, const std::vector<std::string>& subjects);

class FactRegistry {
public:
    void add(RegistryFact f);
    const RegistryFact* find(FactKind k, const std::vector<std::string>& subjects) const;
    // Throws missing-registry-fact naming the fact.
    const RegistryFact& require(FactKind k, const std::vector<std::string>& subjects) const;
    const std::vector<RegistryFact>& facts() const { return facts_; }

private:
    std::vector<RegistryFact> facts_;
};

}  // namespace treg::cycles
