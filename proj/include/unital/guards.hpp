#pragma once

#include <cstdint>
#include <string>

#include "unital/abelian/group.hpp"
#include "unital/limits.hpp"

namespace unital {

/// Throws FinitenessError for infinite groups and CapExceeded above the order cap.
void require_enumerable(const FgAbGroup& g, const Limits& limits, const std::string& what);

/// Counts search states against limits.max_states.
class StateCounter {
 public:
  explicit StateCounter(const Limits& limits) : cap_(limits.max_states) {}
  void add(std::uint64_t n = 1);
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t cap_;
  std::uint64_t count_ = 0;
};

}  // namespace unital
