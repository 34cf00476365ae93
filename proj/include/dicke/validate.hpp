// validate.hpp — Self-contained validation harness: closed-form invariant
// suites and oracle cross-checks against committed golden values.
#pragma once

#include <iosfwd>
#include <string>

namespace dicke {

struct ValidationOptions {
    std::string suite = "all";      // formulas | oracles | all
    bool pin = false;               // regenerate golden files instead of comparing
    std::string golden_dir = "golden";
};

// Runs the requested suites, printing one line per check. Returns the number
// of failed checks. Throws ConfigError for an unknown suite name.
int run_validation(const ValidationOptions& opts, std::ostream& out);

} // namespace dicke
