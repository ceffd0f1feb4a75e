#include "treg/quad/pairing.hpp"

#include <cmath>

#include "treg/error.hpp"
#include "treg/milnor/evaluate.hpp"

namespace treg::quad {

SectionNorm rational_norm(const milnor::FactorRegistry& reg, milnor::FactoredFunction f) {
    auto shared = std::make_shared<const milnor::FactoredFunction>(std::move(f));
    SectionNorm out;
    out.log_norm = [&reg, shared](const Point& p) { return std::log(std::abs(milnor::eval_factored(reg, *shared, p))); };
    out.meets_support = [&reg, shared](const Point& p) {
        for (const auto& [name, e] : shared->exponents) {
            const auto& fac = reg.factor(name);
            if (fac.polynomial && fac.polynomial->evaluate(p) == 0.0) return true;
        }
        return false;
    };
    return out;
}

SectionNorm flat_norm(std::shared_ptr<const elliptic::FlatNormField> field, std::size_t coordinate,
                      double min_distance) {
    SectionNorm out;
    out.log_norm = [field, coordinate](const Point& p) { return elliptic::flat_log_norm(*field, p.at(coordinate)); };
    out.meets_support = [field, coordinate, min_distance](const Point& p) {
        return field->distance_to_support(p.at(coordinate)) < min_distance;
    };
    return out;
}

double cup_product_pairing(const cycles::Ledger& ledger, const std::vector<Intersection>& meets,
                           const std::vector<SectionNorm>& norms) {
    const auto& terms = ledger.terms();
    if (meets.size() != terms.size() || norms.size() != terms.size())
        fail(ErrorCode::invalid_argument, "one intersection and one norm per ledger term");
    long double total = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string where = terms[k].precycle.variety.name();
        if (meets[k].dimension > 0)
            fail(ErrorCode::non_proper_intersection, "D meets " + where + " in dimension " +
                                                         std::to_string(meets[k].dimension));
        long double sum = 0;
        for (const auto& p : meets[k].points) {
            if (norms[k].meets_support(p))
                fail(ErrorCode::intersection_meets_support, "an intersection point on " + where +
                                                                " lies in the divisor of its section");
            sum += norms[k].log_norm(p);
        }
        total += terms[k].coefficient * sum;
    }
    return static_cast<double>(total);
}

}  // namespace treg::quad
