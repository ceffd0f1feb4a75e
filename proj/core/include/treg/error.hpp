#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treg {

enum class ErrorCode {
    point_not_on_curve,
    singular_curve,
    nonzero_degree,
    lattice_degenerate,
    z_on_lattice,
    evaluation_at_support,
    indeterminate_value,
    unregistered_component,
    unresolvable_restriction,
    inconsistent_nesting,
    common_component_uncancelled,
    pattern_not_found,
    degree_nonzero,
    missing_registry_fact,
    multiplicity_mismatch,
    pole_of_k,
    refused_unfolded,
    entry_non_convergence,
    intersection_meets_support,
    non_proper_intersection,
    grid_touches_support,
    schema_invalid,
    invalid_argument,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace treg
