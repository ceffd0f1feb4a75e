#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "treg/quad/surjectivity.hpp"

namespace treg::report {

struct RunConfig {
    double tol = 1e-8;
    int max_depth = 14;
    std::uint64_t mc_n = 200000;
    std::uint64_t mc_seed = 1;
    int lattice_truncation = 20;  // theta-series terms of the Weierstrass engine

    // Sorted key=value lines, the input of the hash.
    std::string canonical() const;
    // FNV-1a 64 of canonical(), as 16 hex digits.
    std::string hash() const;
    quad::SurjectivityOptions surjectivity() const;
};

// key=value lines over the RunConfig keys; '#' starts a comment. Throws schema-invalid.
RunConfig parse_config(const std::string& text, RunConfig base = {});
// Defaults overridden by the file named in TREG_CONFIG, if set.
RunConfig config_from_environment();

// UTC ISO-8601 time from SOURCE_DATE_EPOCH; nullopt when unset, so reports stay byte-stable.
std::optional<std::string> report_timestamp();

}  // namespace treg::report
