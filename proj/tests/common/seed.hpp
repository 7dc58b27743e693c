#pragma once

#include <cstdint>

namespace peierls::testing {

// Set from --seed=N on the test command line; 0 by default.
std::uint64_t seed();

}  // namespace peierls::testing
