#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unital/limits.hpp"

namespace unital {

/// An (n+1)-tuple of cover indices together with a connected component of
/// the corresponding intersection.
struct Simplex {
  std::vector<std::size_t> parts;
  std::size_t component = 0;
  bool operator==(const Simplex&) const = default;
  auto operator<=>(const Simplex&) const = default;
};

/// Simplicial set truncated at level 3, face maps only.
class Nerve {
 public:
  static constexpr int top_level = 3;

  /// faces[n][i][x] = d_i(x) for x in V_{n+1}, 0 <= i <= n+1. Checks the
  /// simplicial identities and throws InputError on failure.
  Nerve(std::vector<std::vector<Simplex>> levels, std::vector<std::vector<std::vector<std::size_t>>> faces);

  std::size_t size(int level) const { return levels_.at(static_cast<std::size_t>(level)).size(); }
  const Simplex& simplex(int level, std::size_t x) const { return levels_.at(static_cast<std::size_t>(level)).at(x); }
  /// d_i : V_level -> V_{level-1}.
  std::size_t face(int level, std::size_t i, std::size_t x) const {
    return faces_[static_cast<std::size_t>(level - 1)][i][x];
  }
  /// Repeated adjacent index, i.e. in the image of a degeneracy.
  bool is_degenerate(int level, std::size_t x) const;
  std::size_t nondegenerate_count() const;

  /// First violated identity d_i d_j = d_{j-1} d_i (i < j), if any.
  std::optional<std::string> simplicial_violation() const;

  /// Same nerve with V_n renumbered: element x moves to perms[n][x].
  Nerve relabeled(const std::vector<std::vector<std::size_t>>& perms) const;

  std::string label(int level, std::size_t x) const;

 private:
  std::vector<std::vector<Simplex>> levels_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
};

/// Nonempty intersection of the distinct parts `parts` (sorted, at least two).
/// parents[c][k] is the component of the intersection without parts[k] that
/// contains component c. An empty `parents` means every parent is 0.
struct Intersection {
  std::vector<std::size_t> parts;
  std::size_t components = 1;
  std::vector<std::vector<std::size_t>> parents;
  bool operator==(const Intersection&) const = default;
};

struct Cover {
  std::vector<std::string> parts;
  /// Unlisted intersections are empty.
  std::vector<Intersection> intersections;
  bool operator==(const Cover&) const = default;
};

/// V_n = (n+1)-tuples with repetition whose intersection is nonempty, one
/// element per component, in lexicographic order. Throws InputError for an
/// inconsistent table and CapExceeded above limits.max_nerve_cells
/// nondegenerate simplices.
Nerve cech_nerve(const Cover& cover, const Limits& limits = {});

Cover point_cover();
/// n arcs, consecutive arcs meeting in one component, no triple overlaps.
Cover circle_cover(std::size_t arcs = 3);
Nerve point_nerve();
Nerve circle_nerve(std::size_t arcs = 3);

}  // namespace unital
