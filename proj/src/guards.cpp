#include "unital/guards.hpp"

#include "unital/errors.hpp"

namespace unital {

void require_enumerable(const FgAbGroup& g, const Limits& limits, const std::string& what) {
  if (!g.is_finite()) throw FinitenessError(what + " must be finite, got " + g.to_string());
  if (g.order() > limits.max_group_order)
    throw CapExceeded(what + " has order " + std::to_string(g.order()) + ", above the cap " +
                      std::to_string(limits.max_group_order));
}

void StateCounter::add(std::uint64_t n) {
  count_ += n;
  if (count_ > cap_) throw CapExceeded("search exceeded " + std::to_string(cap_) + " states");
}

}  // namespace unital
