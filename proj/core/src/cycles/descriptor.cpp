#include "treg/cycles/descriptor.hpp"

#include <map>
#include <set>

#include "treg/error.hpp"

namespace treg::cycles {

std::string kind_name(DescriptorKind k) {
    switch (k) {
    case DescriptorKind::product_of_factors: return "product-of-factors";
    case DescriptorKind::hyperplane_slice: return "hyperplane-slice";
    case DescriptorKind::projection_product: return "projection-product";
    case DescriptorKind::point_fiber: return "point-fiber";
    }
    return "product-of-factors";
}

SubvarietyDescriptor::SubvarietyDescriptor(std::vector<Slot> slots) : slots_(std::move(slots)) {
    std::map<std::string, std::pair<int, int>> groups;  // name -> (dim, varying slots)
    for (const Slot& s : slots_) {
        if (s.label.empty()) fail(ErrorCode::invalid_argument, "descriptor slot without a label");
        if (s.kind != SlotKind::group) continue;
        if (s.group_dim < 1) fail(ErrorCode::invalid_argument, "group '" + s.label + "' needs dimension >= 1");
        auto [it, fresh] = groups.try_emplace(s.label, s.group_dim, 0);
        if (!fresh && it->second.first != s.group_dim)
            fail(ErrorCode::invalid_argument, "group '" + s.label + "' has inconsistent dimensions");
        if (s.varies) ++it->second.second;
    }
    for (const auto& [name, g] : groups)
        if (g.first > g.second)
            fail(ErrorCode::invalid_argument,
                 "group '" + name + "' has dimension " + std::to_string(g.first) + " but only " +
                     std::to_string(g.second) + " varying coordinates");
}

DescriptorKind SubvarietyDescriptor::kind() const {
    bool group = has_group(), point = has_point();
    if (!group) return point ? DescriptorKind::point_fiber : DescriptorKind::product_of_factors;
    for (const Slot& s : slots_)
        if (s.kind != SlotKind::group) return DescriptorKind::projection_product;
    return DescriptorKind::hyperplane_slice;
}

int SubvarietyDescriptor::dimension() const {
    int d = 0;
    std::set<std::string> seen;
    for (const Slot& s : slots_) {
        if (s.kind == SlotKind::full) ++d;
        else if (s.kind == SlotKind::group && seen.insert(s.label).second) d += s.group_dim;
    }
    return d;
}

bool SubvarietyDescriptor::has_point() const { return !point_factors().empty(); }

bool SubvarietyDescriptor::has_group() const {
    for (const Slot& s : slots_)
        if (s.kind == SlotKind::group) return true;
    return false;
}

std::vector<std::size_t> SubvarietyDescriptor::point_factors() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < slots_.size(); ++j)
        if (slots_[j].kind == SlotKind::point) out.push_back(j);
    return out;
}

std::string SubvarietyDescriptor::name() const {
    std::string out;
    std::set<std::string> seen;
    for (const Slot& s : slots_) {
        std::string part;
        switch (s.kind) {
        case SlotKind::full: part = s.label; break;
        case SlotKind::point: part = "{" + s.label + "}"; break;
        case SlotKind::group:
            if (!seen.insert(s.label).second) continue;
            part = s.label;
            break;
        }
        out += (out.empty() ? "" : "x") + part;
    }
    return out;
}

SubvarietyDescriptor SubvarietyDescriptor::with_slot(std::size_t j, Slot s) const {
    auto slots = slots_;
    slots.at(j) = std::move(s);
    return SubvarietyDescriptor(std::move(slots));
}

SubvarietyDescriptor Ambient::whole() const {
    std::vector<Slot> slots;
    for (const auto& f : factors) slots.push_back(Slot::full(f));
    return SubvarietyDescriptor(std::move(slots));
}

}  // namespace treg::cycles
