#ifndef CHASLES_VERIFICATION_HPP
#define CHASLES_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace chasles {

struct CheckResult {
    std::string name;      // stable identifier, usable with --only
    std::string anchor;    // which reference result the check reproduces
    bool pass = false;
    std::string expected;
    std::string computed;
    double ms = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Runs the reference-result suite. `only` filters checks by substring match
/// on the name; empty runs everything.
VerificationReport verify_paper(std::uint64_t seed = 424242, const std::string& only = "");

}  // namespace chasles

#endif
