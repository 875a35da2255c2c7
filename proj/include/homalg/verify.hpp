#pragma once

#include <string>
#include <vector>

#include "homalg/module.hpp"

namespace homalg {

/// One suite run: every checked bound is recorded (never just pass/fail),
/// and failures carry the reproduction seed plus the module document.
struct VerificationOutcome {
    std::string suite;
    uint32_t instances = 0;
    uint32_t failures = 0;
    std::vector<std::string> bounds;    // one line per checked bound value
    std::vector<std::string> failureDetails;

    bool ok() const { return failures == 0; }
};

/// Suite ids:
///   registry-counterexample, sup-hd-vs-pd, torsion-height, torsion-free-hd,
///   sum-submodule, monomial-corollary, shift-sheaf, young-harmonic,
///   orbit, oracle-equivalence, field-independence
VerificationOutcome verify_suite(const std::string& suite, uint64_t seed, uint32_t count);

std::vector<std::string> known_suites();

std::string outcome_to_json(const VerificationOutcome& o);

}  // namespace homalg
