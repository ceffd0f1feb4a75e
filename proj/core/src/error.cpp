#include "treg/error.hpp"

namespace treg {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::point_not_on_curve: return "point-not-on-curve";
    case ErrorCode::singular_curve: return "singular-curve";
    case ErrorCode::nonzero_degree: return "nonzero-degree";
    case ErrorCode::lattice_degenerate: return "lattice-degenerate";
    case ErrorCode::z_on_lattice: return "z-on-lattice";
    case ErrorCode::evaluation_at_support: return "evaluation-at-support";
    case ErrorCode::indeterminate_value: return "indeterminate-value";
    case ErrorCode::unregistered_component: return "unregistered-component";
    case ErrorCode::unresolvable_restriction: return "unresolvable-restriction";
    case ErrorCode::inconsistent_nesting: return "inconsistent-nesting";
    case ErrorCode::common_component_uncancelled: return "common-component-uncancelled";
    case ErrorCode::pattern_not_found: return "pattern-not-found";
    case ErrorCode::degree_nonzero: return "degree-nonzero";
    case ErrorCode::missing_registry_fact: return "missing-registry-fact";
    case ErrorCode::multiplicity_mismatch: return "multiplicity-mismatch";
    case ErrorCode::pole_of_k: return "pole-of-k-at-P";
    case ErrorCode::refused_unfolded: return "refused-unfolded";
    case ErrorCode::entry_non_convergence: return "entry-non-convergence";
    case ErrorCode::intersection_meets_support: return "intersection-meets-divisor-support";
    case ErrorCode::non_proper_intersection: return "non-proper-intersection";
    case ErrorCode::grid_touches_support: return "grid-touches-support";
    case ErrorCode::schema_invalid: return "schema-invalid";
    case ErrorCode::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

}  // namespace treg
