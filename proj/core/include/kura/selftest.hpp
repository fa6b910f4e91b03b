#ifndef KURA_SELFTEST_HPP
#define KURA_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kura {

struct CheckResult {
    std::string name;
    bool pass = false;
    int cases = 0;
    std::string detail;  // first failure description, empty when passing
};

/// Runs the full invariant suite on seeded random sets. `seeds` scales the
/// number of random instances per check; identical (seeds, rng_seed) give
/// identical results.
std::vector<CheckResult> run_selftest(int seeds, std::uint64_t rng_seed);

}  // namespace kura

#endif
