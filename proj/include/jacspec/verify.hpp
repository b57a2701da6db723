#pragma once

// Named identity-verification suites.  Each suite covers one acceptance
// criterion: it draws its (seeded, reproducible) random cases, evaluates both
// sides of every identity through independent routes, and reports the worst
// relative error against the pinned tolerance.  The CLI `verify` command and
// the acceptance runner share these implementations.

#include <cstdint>
#include <string>
#include <vector>

#include "jacspec/types.hpp"

namespace jacspec {

struct SuiteCheck {
    std::string name;
    double err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    double max_err = 0.0;
    int cases = 0;
    double wall_ms = 0.0;
    std::vector<SuiteCheck> checks;
};

inline constexpr std::uint64_t kVerifySeed = 0x5eed5ca1a51ULL;

std::vector<std::string> verify_suite_names();

SuiteResult run_verify_suite(const std::string& name, const ToleranceConfig& cfg = {},
                             std::uint64_t seed = kVerifySeed);

} // namespace jacspec
