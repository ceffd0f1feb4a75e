#include "treg/cycles/completion.hpp"

#include <algorithm>
#include <map>

#include "treg/error.hpp"

namespace treg::cycles {

namespace {

using milnor::FactoredFunction;

class Builder {
public:
    explicit Builder(const Ambient& ambient) : out_{Ledger(ambient), {}, {}} {}

    void add(const std::string& role, long coefficient, Precycle p, std::vector<std::string> facts) {
        out_.ledger.add(coefficient, p, role);
        out_.log.push_back({role, coefficient, std::move(p), std::move(facts)});
    }
    void stage(const std::string& role) { out_.stages.push_back({role, ledger_divisor(out_.ledger)}); }
    FormalDivisor divisor() const { return ledger_divisor(out_.ledger); }
    Completion finish() && { return std::move(out_); }

    // Fresh symbolic section "symbol_k" on v, a section of "bundle_k" unless bundle is empty.
    Precycle section(const std::string& symbol, const std::string& bundle, const SubvarietyDescriptor& v,
                     FormalDivisor div) {
        std::string k = std::to_string(++issued_[symbol]);
        auto f = FactoredFunction::factor(v.name(), symbol + "_" + k);
        if (!bundle.empty()) f.bundle[bundle + "_" + k] = 1;
        return {std::move(f), v, std::move(div)};
    }

private:
    Completion out_;
    std::map<std::string, int> issued_;
};

// Point slot label at j, or throws.
const std::string& point_at(const SubvarietyDescriptor& c, std::size_t j) {
    const Slot& s = c.slots().at(j);
    if (s.kind != SlotKind::point)
        fail(ErrorCode::invalid_argument, "component " + c.name() + " is not a point on factor " + std::to_string(j + 1));
    return s.label;
}

}  // namespace

Completion complete_on_product(const Ambient& ambient, const Precycle& input, const FactRegistry& facts) {
    if (ambient.factors.size() != 2) fail(ErrorCode::invalid_argument, "product completion needs two factors");
    if (input.variety.dimension() != 1) fail(ErrorCode::invalid_argument, input.variety.name() + " is not a curve");
    Builder b(ambient);
    if (input.divisor.empty()) {
        b.add("seed", 1, input, {});
        b.stage("seed");
        return std::move(b).finish();
    }

    long degree = 0;
    std::map<std::string, FormalDivisor> by_q;
    std::map<std::string, long> n_q;
    for (const auto& [c, n] : input.divisor) {
        point_at(c, 0);
        accumulate(by_q[point_at(c, 1)], c, n);
        n_q[point_at(c, 1)] += n;
        degree += n;
    }
    if (degree != 0)
        fail(ErrorCode::degree_nonzero, "divisor of " + input.section.str() + " has degree " + std::to_string(degree));
    input.validate();

    const auto& c1 = facts.require(FactKind::degree_zero_flat_bundle, {ambient.factors[0]});
    const auto& c2 = facts.require(FactKind::degree_zero_flat_bundle, {ambient.factors[1]});
    const std::string base = c1.base_point.value_or(point_at(input.divisor.begin()->first, 0));
    b.add("seed", 1, input, {});
    b.stage("seed");

    auto point = [](const std::string& p, const std::string& q) {
        return SubvarietyDescriptor({Slot::point(p), Slot::point(q)});
    };
    FormalDivisor horizontal;
    for (const auto& [q, div] : by_q) {
        FormalDivisor d = div;
        accumulate(d, point(base, q), -n_q[q]);
        accumulate(horizontal, point(base, q), n_q[q]);
        if (d.empty()) continue;
        SubvarietyDescriptor v({Slot::full(ambient.factors[0]), Slot::point(q)});
        b.add("vertical-correction", -1, b.section("sigma", "L", v, std::move(d)), {c1.id()});
    }
    b.stage("vertical-correction");
    if (!horizontal.empty()) {
        SubvarietyDescriptor v({Slot::point(base), Slot::full(ambient.factors[1])});
        b.add("horizontal-correction", -1, b.section("sigma", "L", v, horizontal), {c2.id()});
    }
    b.stage("horizontal-correction");
    if (!b.divisor().empty()) fail(ErrorCode::multiplicity_mismatch, "left over: " + str(b.divisor()));
    return std::move(b).finish();
}

Completion complete_hyperplane_precycle(const Ambient& ambient, const Precycle& input, const FactRegistry& facts) {
    input.validate();
    Builder b(ambient);
    b.add("seed", 1, input, {});
    b.stage("seed");

    for (const auto& [c, m] : classify_hvc(input.divisor).residual) {
        const auto& eq = facts.require(FactKind::hvc_equivalence, {c.name()});
        const SubvarietyDescriptor& z = *eq.carrier;
        for (const auto& [h, n] : eq.hvc)
            if (!h.has_point())
                fail(ErrorCode::invalid_argument, eq.id() + " lists " + h.name() + ", which is not horizontal/vertical");
        const auto& irr = facts.require(FactKind::generic_hyperplane_irreducible, {z.name()});
        const auto& pic = facts.require(FactKind::picard_restriction, {z.name()});
        FormalDivisor div{{c, 1}};
        b.add("hvc-transfer", -m, b.section("beta", "J", z, div + scale(eq.hvc, -1)), {eq.id(), irr.id(), pic.id()});
    }
    b.stage("hvc-transfer");

    // horizontal/vertical components with only points and full factors, keyed by which factors are points
    std::map<std::vector<std::size_t>, std::vector<HvcComponent>> fibres;
    for (auto& h : classify_hvc(b.divisor()).hvc)
        if (!h.component.has_group()) fibres[h.component.point_factors()].push_back(std::move(h));
    for (const auto& [key, comps] : fibres) {
        long total = 0;
        for (const auto& h : comps) total += h.multiplicity;
        if (total != 0)
            fail(ErrorCode::multiplicity_mismatch,
                 "point fibres over " + comps.front().moving_label() + " sum to " + std::to_string(total));
        long running = 0;
        for (std::size_t k = 0; k + 1 < comps.size(); ++k) {
            running += comps[k].multiplicity;
            if (running == 0) continue;
            const auto& curve = facts.require(FactKind::bertini_curve,
                                              {comps[k].point_label(), comps[k + 1].point_label()});
            FormalDivisor div{{comps[k].component, 1}, {comps[k + 1].component, -1}};
            b.add("point-fiber-cancel", -1, b.section("gamma", "R", *curve.carrier, std::move(div)).pow(running),
                  {curve.id()});
        }
    }
    b.stage("point-fiber-cancel");

    // slice x point: exactly one collapsed factor, the rest carried by slices
    auto slice_points = [&] {
        std::map<std::size_t, std::vector<HvcComponent>> out;
        for (auto& h : classify_hvc(b.divisor()).hvc)
            if (h.component.has_group() && h.collapsed.size() == 1) out[h.collapsed.front().first].push_back(std::move(h));
        return out;
    };
    for (const auto& [j, comps] : slice_points()) {
        const auto* flat_fact = facts.find(FactKind::degree_zero_flat_bundle, {ambient.factors.at(j)});
        std::string b_j = comps.front().collapsed.front().second;
        for (const auto& h : comps) b_j = std::min(b_j, h.collapsed.front().second);
        if (flat_fact && flat_fact->base_point) b_j = *flat_fact->base_point;
        for (const auto& h : comps) {
            const std::string& q = h.collapsed.front().second;
            if (q == b_j) continue;
            const auto& flat = facts.require(FactKind::degree_zero_flat_bundle, {ambient.factors.at(j)});
            auto v = h.component.with_slot(j, Slot::full(ambient.factors.at(j)));
            FormalDivisor div{{h.component, 1}, {h.component.with_slot(j, Slot::point(b_j)), -1}};
            b.add("point-transport", -1, b.section("nu", "F", v, std::move(div)).pow(h.multiplicity), {flat.id()});
        }
    }
    b.stage("point-transport");

    for (const auto& [j, comps] : slice_points()) {
        long total = 0;
        for (const auto& h : comps) total += h.multiplicity;
        if (total != 0)
            fail(ErrorCode::multiplicity_mismatch, "slices over point " + comps.front().collapsed.front().second +
                                                       " sum to " + std::to_string(total));
        long running = 0;
        for (std::size_t k = 0; k + 1 < comps.size(); ++k) {
            running += comps[k].multiplicity;
            if (running == 0) continue;
            const auto& rat = facts.require(FactKind::rational_equivalence,
                                            {comps[k].moving_label(), comps[k + 1].moving_label()});
            const SubvarietyDescriptor& w = *rat.carrier;
            if (w.factor_count() <= j || w.slots()[j].kind != SlotKind::full)
                fail(ErrorCode::invalid_argument, rat.id() + " carrier " + w.name() + " does not span factor " +
                                                      std::to_string(j + 1));
            auto v = w.with_slot(j, comps[k].component.slots()[j]);
            FormalDivisor div{{comps[k].component, 1}, {comps[k + 1].component, -1}};
            b.add("slice-cancel", -1, b.section("g", "", v, std::move(div)).pow(running), {rat.id()});
        }
    }
    b.stage("slice-cancel");

    if (!b.divisor().empty()) fail(ErrorCode::multiplicity_mismatch, "left over: " + str(b.divisor()));
    return std::move(b).finish();
}

}  // namespace treg::cycles
