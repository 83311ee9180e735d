#pragma once
// Torsor-class counting straight from the definitions, with its own nerve
// built from explicit index tuples. Coefficients: Z/na --x lam--> Z/nb.

#include <cstdint>
#include <vector>

namespace oracle {

struct TupleNerve {
  // levels[n] = list of (n+1)-tuples
  std::vector<std::vector<std::vector<int>>> levels;
  // face(n, i, x): drop entry i of tuple x at level n
  std::size_t face(int n, int i, std::size_t x) const;
};

/// Point: one part. Circle: `arcs` parts, consecutive ones meeting once,
/// no triple overlaps.
TupleNerve tuple_point();
TupleNerve tuple_circle(int arcs);

/// Number of pairs (a, b) satisfying both cocycle relations, and the number
/// of orbits under a -> a + d0 alpha - d1 alpha, b -> b + lam alpha. Plain
/// loops over every a in (Z/na)^{V_1} and b in (Z/nb)^{V_0}.
struct BruteTorsors {
  std::uint64_t cocycles = 0;
  std::uint64_t classes = 0;
};
BruteTorsors brute_torsor_classes(const TupleNerve& n, int na, int nb, int lam);

}  // namespace oracle
