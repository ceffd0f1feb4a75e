#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace treg::cycles {

enum class SlotKind { full, point, group };

// Content of one factor of a product variety.
struct Slot {
    SlotKind kind = SlotKind::full;
    std::string label;  // factor name (full), point label (point) or group name (group)
    int group_dim = 0;  // dimension of the named subvariety the group slots jointly describe
    bool varies = true; // group slots only: the coordinate moves along the group

    static Slot full(std::string factor) { return {SlotKind::full, std::move(factor), 0, true}; }
    static Slot point(std::string label) { return {SlotKind::point, std::move(label), 0, false}; }
    static Slot group(std::string name, int dim, bool varies = true) {
        return {SlotKind::group, std::move(name), dim, varies};
    }

    friend bool operator==(const Slot&, const Slot&) = default;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};

enum class DescriptorKind { product_of_factors, hyperplane_slice, projection_product, point_fiber };

std::string kind_name(DescriptorKind k);

// Subvariety of a product of curves E_1 x ... x E_n, one slot per factor.
// Identity is the slot list; the name is derived from it.
class SubvarietyDescriptor {
public:
    SubvarietyDescriptor() = default;
    explicit SubvarietyDescriptor(std::vector<Slot> slots);

    const std::vector<Slot>& slots() const { return slots_; }
    std::size_t factor_count() const { return slots_.size(); }
    DescriptorKind kind() const;
    int dimension() const;
    int codimension() const { return static_cast<int>(slots_.size()) - dimension(); }
    bool has_point() const;
    std::vector<std::size_t> point_factors() const;
    bool has_group() const;
    std::string name() const;

    SubvarietyDescriptor with_slot(std::size_t j, Slot s) const;

    friend bool operator==(const SubvarietyDescriptor&, const SubvarietyDescriptor&) = default;
    friend auto operator<=>(const SubvarietyDescriptor&, const SubvarietyDescriptor&) = default;

private:
    std::vector<Slot> slots_;
};

struct Ambient {
    std::string name;
    std::vector<std::string> factors;
    SubvarietyDescriptor whole() const;
};

}  // namespace treg::cycles
