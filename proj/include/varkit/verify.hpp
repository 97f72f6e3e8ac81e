#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "varkit/generality.hpp"

namespace varkit {

struct VerificationOptions {
    std::uint64_t seed = 1;
    /// Empty runs everything; "theorem1", "theorem2", "lemma" or
    /// "properties" restricts to that group.
    std::string only;
    /// Replaces the seeded section in the disjointness check (the forced
    /// failure path of the CLI).
    std::optional<SectionPhi> phi_override;
};

struct CheckResult {
    int criterion = 0;  // acceptance criterion this check belongs to
    std::string id;     // stable identifier, e.g. "t1.hodge"
    bool pass = false;
    std::string detail;
};

/// Replays both built-in constructions end to end and runs the property
/// suites; every expected value is pinned in the checks themselves.
std::vector<CheckResult> run_verification(const VerificationOptions& opts);

}  // namespace varkit
