#pragma once

// The batch verification suite behind `qwa verify-all`.

#include <cstdint>
#include <string>
#include <vector>

#include "qwa/serialize.hpp"

namespace qwa {

enum class Status { pass, fail, inconclusive };

struct SuiteOptions {
    std::vector<int> primes{2, 3, 5};
    std::uint64_t seed = 1;
    /// Mutation harness: "", "split-d", "kill-delta", "p2-inner".
    std::string mutate;
};

/// Certificates sorted by check name, plus an overall status.
json run_suite(const SuiteOptions& options);

Status overall_status(const json& report);
int exit_code(Status s);

} // namespace qwa
