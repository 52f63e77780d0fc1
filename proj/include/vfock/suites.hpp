#pragma once

// Named verification suites. Each suite draws its random parameters from a
// seeded RationalSampler and emits JSON lines: a header naming the identity
// under test, one line per check or probe, and a summary last.
//
// A check asserts an identity; a failing check counts as falsified. A probe
// compares a printed formula that is known to be doubtful against the
// computed action and reports the difference without failing.

#include <cstdint>
#include <string>
#include <vector>

#include "vfock/serialize.hpp"

namespace vfock {

struct SuiteResult {
    std::vector<Json> lines;
    int checks = 0;
    int falsified = 0;
    int probes = 0;

    bool ok() const { return falsified == 0; }
};

const std::vector<std::string>& suite_names();

// Degree bound used when max_degree < 0.
int default_max_degree(const std::string& suite);

// Throws ParseError for an unknown suite name.
SuiteResult run_suite(const std::string& suite, std::uint64_t seed, int max_degree = -1);

} // namespace vfock
