#pragma once

#include <cstdint>
#include <vector>

namespace memsim {

/// Simulation clock, in memory cycles.
using Clk = std::int64_t;

/// Raw byte address as seen by the frontend.
using Addr = std::int64_t;

/// Decoded address: one index per organization level, -1 for levels below
/// the relevant scope.
using AddrVec = std::vector<int>;

} // namespace memsim
