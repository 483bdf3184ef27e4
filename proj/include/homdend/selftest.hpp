#pragma once

#include <cstdint>
#include <ostream>

namespace homdend {

/// Runs the property suites with a fixed seed, writing one line per suite.
/// The transcript is byte-identical across runs with the same seed and flags.
bool run_selftest(std::ostream& os, std::uint64_t seed, bool quick = false);

}  // namespace homdend
