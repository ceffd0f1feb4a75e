#include "treg/cycles/ledger.hpp"

#include <sstream>

#include "treg/error.hpp"

namespace treg::cycles {

void accumulate(FormalDivisor& d, const SubvarietyDescriptor& c, long n) {
    if (n == 0) return;
    auto [it, fresh] = d.try_emplace(c, 0);
    it->second += n;
    if (it->second == 0) d.erase(it);
}

FormalDivisor operator+(const FormalDivisor& a, const FormalDivisor& b) {
    FormalDivisor out = a;
    for (const auto& [c, n] : b) accumulate(out, c, n);
    return out;
}

FormalDivisor scale(const FormalDivisor& d, long n) {
    FormalDivisor out;
    for (const auto& [c, m] : d) accumulate(out, c, m * n);
    return out;
}

std::string str(const FormalDivisor& d) {
    if (d.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, n] : d) {
        if (!first) os << (n < 0 ? " - " : " + ");
        else if (n < 0) os << "-";
        long a = n < 0 ? -n : n;
        if (a != 1) os << a << "*";
        os << c.name();
        first = false;
    }
    return os.str();
}

void Precycle::validate() const {
    const std::string where = "precycle on " + variety.name();
    if (section.ambient != variety.name())
        fail(ErrorCode::invalid_argument, where + ": section lives on '" + section.ambient + "'");
    const auto& vs = variety.slots();
    long degree = 0;
    for (const auto& [c, n] : divisor) {
        if (c.factor_count() != vs.size())
            fail(ErrorCode::invalid_argument, where + ": component " + c.name() + " has the wrong factor count");
        if (c.dimension() != variety.dimension() - 1)
            fail(ErrorCode::invalid_argument, where + ": component " + c.name() + " is not of codimension one");
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (vs[j].kind == SlotKind::point && c.slots()[j] != vs[j])
                fail(ErrorCode::invalid_argument, where + ": component " + c.name() + " leaves the fibre");
        degree += n;
    }
    if (variety.dimension() == 1 && degree != 0)
        fail(ErrorCode::invalid_argument, where + ": divisor on a curve has degree " + std::to_string(degree));
}

Precycle Precycle::pow(long n) const { return {section.pow(n), variety, scale(divisor, n)}; }

void Ledger::add(long coefficient, Precycle p, std::string role) {
    if (coefficient == 0) return;
    if (!ambient_.factors.empty() && p.variety.factor_count() != ambient_.factors.size())
        fail(ErrorCode::invalid_argument, "precycle on " + p.variety.name() + " does not fit the ambient");
    p.validate();
    terms_.push_back({coefficient, std::move(p), std::move(role)});
}

Ledger Ledger::operator+(const Ledger& o) const {
    Ledger out = *this;
    for (const auto& t : o.terms_) out.terms_.push_back(t);
    return out;
}

FormalDivisor ledger_divisor(const Ledger& l) {
    FormalDivisor out;
    for (const auto& t : l.terms())
        for (const auto& [c, n] : t.precycle.divisor) accumulate(out, c, n * t.coefficient);
    return out;
}

std::vector<std::size_t> surviving_terms(const Ledger& l, const FormDescriptor& form) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < l.terms().size(); ++k)
        if (!restriction_vanishes(form, l.terms()[k].precycle.variety)) out.push_back(k);
    return out;
}

std::string HvcComponent::point_label() const {
    std::string out = "(";
    for (std::size_t k = 0; k < collapsed.size(); ++k) out += (k ? "," : "") + collapsed[k].second;
    return out + ")";
}

std::string HvcComponent::moving_label() const {
    std::vector<Slot> slots;
    for (std::size_t j : moving_factors) slots.push_back(component.slots()[j]);
    return SubvarietyDescriptor(std::move(slots)).name();
}

HvcSplit classify_hvc(const FormalDivisor& d) {
    HvcSplit out;
    for (const auto& [c, n] : d) {
        if (!c.has_point()) {
            accumulate(out.residual, c, n);
            continue;
        }
        HvcComponent h;
        h.component = c;
        h.multiplicity = n;
        for (std::size_t j = 0; j < c.factor_count(); ++j) {
            if (c.slots()[j].kind == SlotKind::point) h.collapsed.emplace_back(j, c.slots()[j].label);
            else h.moving_factors.push_back(j);
        }
        out.hvc.push_back(std::move(h));
    }
    return out;
}

}  // namespace treg::cycles
