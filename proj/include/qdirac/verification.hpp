#pragma once

#include <string>

#include "qdirac/cli.hpp"

namespace qdirac {

struct VerificationReport {
    std::string json_text;  // single JSON object, stable key order
    bool all_asserted_passed = true;
};

/// Runs every named check. Sections marked "diagnostic" record numbers only
/// and never affect all_asserted_passed.
VerificationReport build_verification_report(const cli::RunConfig& cfg);

}  // namespace qdirac
