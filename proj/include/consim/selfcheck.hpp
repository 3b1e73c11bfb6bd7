#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace consim {

struct CheckResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
};

struct SelfcheckReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (c.failures != 0) return false;
        return !checks.empty();
    }
};

// Runs every property trial in the suite, `trials` times each. Every trial
// re-seeds from (seed, check index, trial index), so runs are reproducible
// and trials are independent.
SelfcheckReport run_selfcheck(std::uint64_t seed, std::size_t trials);

}  // namespace consim
