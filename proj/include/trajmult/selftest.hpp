#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace trajmult {

struct SelftestReport {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;
};

/// Golden examples plus a seeded randomized invariant sweep (chain-rule identity, method equivalence,
/// degree and multiplicity bounds, Lie algebra identities). One line per check goes to `log`.
SelftestReport run_selftest(std::ostream& log, std::uint64_t seed = 20240601, std::size_t random_instances = 60);

}  // namespace trajmult
