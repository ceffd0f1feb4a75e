#include "treg/cycles/facts.hpp"

#include <algorithm>

#include "treg/error.hpp"

namespace treg::cycles {

namespace {

bool symmetric(FactKind k) { return k == FactKind::bertini_curve || k == FactKind::rational_equivalence; }

std::vector<std::string> key(FactKind k, std::vector<std::string> subjects) {
    if (symmetric(k)) std::sort(subjects.begin(), subjects.end());
    return subjects;
}

std::size_t arity(FactKind k) { return symmetric(k) ? 2 : 1; }

}  // namespace

std::string fact_kind_name(FactKind k) {
    switch (k) {
    case FactKind::hvc_equivalence: return "hvc_equivalence";
    case FactKind::generic_hyperplane_irreducible: return "generic_hyperplane_irreducible";
    case FactKind::picard_restriction: return "picard_restriction";
    case FactKind::bertini_curve: return "bertini_curve";
    case FactKind::rational_equivalence: return "rational_equivalence";
    case FactKind::degree_zero_flat_bundle: return "degree_zero_flat_bundle";
    }
    return "degree_zero_flat_bundle";
}

std::optional<FactKind> parse_fact_kind(const std::string& s) {
    for (auto k : {FactKind::hvc_equivalence, FactKind::generic_hyperplane_irreducible, FactKind::picard_restriction,
                   FactKind::bertini_curve, FactKind::rational_equivalence, FactKind::degree_zero_flat_bundle})
        if (fact_kind_name(k) == s) return k;
    return std::nullopt;
}

std::string fact_id(FactKind k, const std::vector<std::string>& subjects) {
    std::string out = fact_kind_name(k) + "(";
    auto sorted = key(k, subjects);
    for (std::size_t i = 0; i < sorted.size(); ++i) out += (i ? ", " : "") + sorted[i];
    return out + ")";
}

std::string RegistryFact::id() const { return fact_id(kind, subjects); }

void FactRegistry::add(RegistryFact f) {
    if (f.subjects.size() != arity(f.kind))
        fail(ErrorCode::schema_invalid, fact_kind_name(f.kind) + " needs " + std::to_string(arity(f.kind)) + " subject(s)");
    bool needs_carrier = f.kind == FactKind::hvc_equivalence || f.kind == FactKind::bertini_curve ||
                         f.kind == FactKind::rational_equivalence;
    if (needs_carrier && !f.carrier) fail(ErrorCode::schema_invalid, f.id() + " needs a carrier");
    if (find(f.kind, f.subjects)) fail(ErrorCode::schema_invalid, f.id() + " recorded twice");
    facts_.push_back(std::move(f));
}

const RegistryFact* FactRegistry::find(FactKind k, const std::vector<std::string>& subjects) const {
    auto want = key(k, subjects);
    for (const auto& f : facts_)
        if (f.kind == k && key(k, f.subjects) == want) return &f;
    return nullptr;
}

const RegistryFact& FactRegistry::require(FactKind k, const std::vector<std::string>& subjects) const {
    if (const auto* f = find(k, subjects)) return *f;
    fail(ErrorCode::missing_registry_fact, fact_id(k, subjects));
}

}  // namespace treg::cycles
