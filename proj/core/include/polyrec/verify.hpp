#pragma once

#include <string>
#include <vector>

#include "polyrec/reconstruct.hpp"

namespace polyrec {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string witness; // failure detail, empty on pass
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> checks;

    bool all_pass() const;
};

// Suites: basic-excess, pyramid-theorems, excess-theorem,
// orientation-existence, facet-count-minimum, roundtrip.
// Throws unknown_suite.
SuiteReport run_suite(const std::string& name, const ReconstructOptions& opt = {});

std::vector<std::string> suite_names();

} // namespace polyrec
