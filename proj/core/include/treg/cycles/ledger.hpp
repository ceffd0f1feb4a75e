#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "treg/cycles/descriptor.hpp"
#include "treg/cycles/form.hpp"
#include "treg/milnor/factored.hpp"

namespace treg::cycles {

// Formal integer combination of subvarieties; zero coefficients are never stored.
using FormalDivisor = std::map<SubvarietyDescriptor, long>;

void accumulate(FormalDivisor& d, const SubvarietyDescriptor& c, long n);
FormalDivisor operator+(const FormalDivisor& a, const FormalDivisor& b);
FormalDivisor scale(const FormalDivisor& d, long n);
std::string str(const FormalDivisor& d);

// A rational section of a flat bundle on a subvariety, with its declared divisor.
struct Precycle {
    milnor::FactoredFunction section;
    SubvarietyDescriptor variety;
    FormalDivisor divisor;

    bool twisted() const { return !section.bundle.empty(); }
    // Section lives on `variety`; divisor components are codimension one in it and respect its
    // collapsed points; on a curve the divisor has degree zero. Throws invalid-argument.
    void validate() const;
    // section^n with divisor n * divisor.
    Precycle pow(long n) const;
};

struct LedgerTerm {
    long coefficient = 1;
    Precycle precycle;
    std::string role;
};

class Ledger {
public:
    Ledger() = default;
    explicit Ledger(Ambient ambient) : ambient_(std::move(ambient)) {}

    const Ambient& ambient() const { return ambient_; }
    const std::vector<LedgerTerm>& terms() const { return terms_; }
    void add(long coefficient, Precycle p, std::string role = {});
    Ledger operator+(const Ledger& o) const;

private:
    Ambient ambient_;
    std::vector<LedgerTerm> terms_;
};

FormalDivisor ledger_divisor(const Ledger& l);
inline bool is_twisted_cycle(const Ledger& l) { return ledger_divisor(l).empty(); }

// Indices of terms whose variety does not kill `form`.
std::vector<std::size_t> surviving_terms(const Ledger& l, const FormDescriptor& form);

// p x V: collapsed points on some factors, a moving part on the rest.
struct HvcComponent {
    std::vector<std::pair<std::size_t, std::string>> collapsed;  // (factor, point label)
    std::vector<std::size_t> moving_factors;
    SubvarietyDescriptor component;
    long multiplicity = 0;
    std::string point_label() const;   // "(a1,a2,a3)"
    std::string moving_label() const;  // name of the moving part alone
};

struct HvcSplit {
    std::vector<HvcComponent> hvc;
    FormalDivisor residual;
};

HvcSplit classify_hvc(const FormalDivisor& d);

}  // namespace treg::cycles
