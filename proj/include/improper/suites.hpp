#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "improper/spectrum.hpp"

namespace improper {

struct SuiteOptions {
    std::optional<int> p;     // single p instead of a range
    std::optional<int> pmax;
    std::optional<int> nmax;
    std::optional<int> q;
    unsigned workers = 1;
    std::uint64_t seed = 0;
};

// mainthm fig3 fig4 fig5 qproper thm32 oracle-equivalence classspec properties
const std::vector<std::string>& suite_names();

// Throws InvalidParameters for an unknown suite or out-of-guard options.
// The table never contains timings, so it depends only on the options
// (worker count excluded).
VerificationTable run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace improper
