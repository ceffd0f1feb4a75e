#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treg/error.hpp"
#include "treg/report/config.hpp"
#include "treg/report/corpus.hpp"

namespace treg::report {

enum class Status { pass, fail, skipped };
std::string status_name(Status s);

struct VerificationReport {
    std::string check_id;
    std::string anchor;  // checked property, or "plumbing"
    Status status = Status::skipped;
    std::string gate;    // condition the payload must meet for pass
    std::map<std::string, double> payload;
    std::string detail;
};

// tame, higher-tame, boundary-squared and reciprocity checks; an empty suite yields one skipped report.
std::vector<VerificationReport> tame_suites(const Corpus& corpus);
std::vector<VerificationReport> reciprocity_suite(const Corpus& corpus);

// 0 if nothing failed, 1 otherwise.
int exit_code(const std::vector<VerificationReport>& reports);
// 2 for schema-invalid and invalid-argument, 3 for missing-registry-fact, 1 otherwise.
int exit_code(ErrorCode code);

}  // namespace treg::report
