#pragma once

#include <filesystem>
#include <string>

#include "treg/report/config.hpp"

namespace treg::report {

enum class Format { json, csv };

struct CommandResult {
    int exit_code = 0;
    std::string output;  // newline-terminated document
};

// Each command returns its document and exit code; treg::Error escapes for input and registry failures.
CommandResult cmd_verify_tame(const std::filesystem::path& corpus, const RunConfig& cfg);
CommandResult cmd_verify_reciprocity(const std::filesystem::path& corpus, const RunConfig& cfg);
CommandResult cmd_complete(const std::filesystem::path& corpus, const std::string& target, const RunConfig& cfg);
CommandResult cmd_integrate(const std::string& case_id, const RunConfig& cfg, bool oracle_only);
CommandResult cmd_surjectivity(const RunConfig& cfg, Format format);
CommandResult cmd_harmonicity(const std::filesystem::path& corpus, const RunConfig& cfg);

// Reference value of an integration case: 0, 4 pi or pi.
double case_golden(const std::string& case_id);

}  // namespace treg::report
