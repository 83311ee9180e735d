#pragma once

#include <cstddef>
#include <cstdint>

namespace unital {

/// Caps for exhaustive computations. Exceeding one raises CapExceeded.
struct Limits {
  std::uint64_t max_group_order = 256;
  std::size_t max_nerve_cells = 64;
  std::uint64_t max_states = 10'000'000;
};

}  // namespace unital
