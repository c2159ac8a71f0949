#ifndef TORSOR_SELFTEST_HPP
#define TORSOR_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace torsor::selftest {

struct SuiteResult {
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0.0;
};

/// Run the built-in property suites with deterministic per-suite seeding.
/// `quick` trims sample counts; suites run concurrently but results come back
/// in a fixed order.
std::vector<SuiteResult> run_all(std::uint64_t seed, bool quick);

}  // namespace torsor::selftest

#endif
