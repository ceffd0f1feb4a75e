#pragma once

#include <string>
#include <vector>

#include "treg/cycles/facts.hpp"
#include "treg/cycles/ledger.hpp"

namespace treg::cycles {

struct CompletionStep {
    std::string role;
    long coefficient = 0;
    Precycle precycle;
    std::vector<std::string> facts;
};

struct CompletionStage {
    std::string role;
    FormalDivisor divisor;  // ledger divisor after the stage
};

struct Completion {
    Ledger ledger;
    std::vector<CompletionStep> log;
    std::vector<CompletionStage> stages;
};

// Closes a section f on a curve D in C_1 x C_2 whose divisor is a sum of points:
// corrections on C_1 x {q} move every point to the base point p, then one on {p} x C_2.
// Throws degree-nonzero, missing-registry-fact.
Completion complete_on_product(const Ambient& ambient, const Precycle& input, const FactRegistry& facts);

// Closes a section on a surface whose divisor holds complete intersections and
// horizontal/vertical cycles: transfer to HVC, cancel point fibres along Bertini curves,
// transport slice-times-point components to a common point, cancel slices by rational equivalence.
// Throws missing-registry-fact, multiplicity-mismatch.
Completion complete_hyperplane_precycle(const Ambient& ambient, const Precycle& input, const FactRegistry& facts);

}  // namespace treg::cycles
