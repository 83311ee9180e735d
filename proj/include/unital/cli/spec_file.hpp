#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "unital/abelian/group.hpp"
#include "unital/cech/nerve.hpp"
#include "unital/complexes/complex.hpp"
#include "unital/crossed/crossed_module.hpp"

namespace unital::cli {

inline constexpr int schema_version = 1;

/// Abelian group as listed by the user: one generator per cyclic order in
/// `inv` (0 = infinite cyclic), then `free` generators. Crossed modules use
/// `table` instead.
struct GroupSpec {
  std::vector<Int> inv;
  std::size_t free = 0;
  std::vector<std::vector<FiniteGroup::Elem>> table;
  bool operator==(const GroupSpec&) const = default;
};

/// Matrices are row-major, one row per target generator.
struct ComplexSpecFile {
  int schema = schema_version;
  std::string kind;  // complex2 | complex3 | crossed_module
  std::map<std::string, GroupSpec> groups;
  std::map<std::string, std::vector<std::vector<Int>>> maps;
  std::vector<FiniteGroup::Elem> boundary;
  std::vector<std::vector<FiniteGroup::Elem>> action;
  std::optional<Cover> nerve;
  bool operator==(const ComplexSpecFile&) const = default;
};

/// Throws InputError with a json-pointer style path on the first problem.
/// Well-definedness of the maps and λδ = 0 are checked too.
ComplexSpecFile parse_spec(const std::string& text);
ComplexSpecFile parse_spec_json(const nlohmann::json& j);
nlohmann::json to_json(const ComplexSpecFile& spec);
std::string print_spec(const ComplexSpecFile& spec);

/// Either {"builtin": "point"}, {"builtin": "circle", "arcs": k} or
/// {"parts": [...], "intersections": [{"parts", "components", "parents"}]}.
Cover parse_cover_json(const nlohmann::json& j, const std::string& path = "");
Cover parse_cover(const std::string& text);
nlohmann::json to_json(const Cover& cover);

/// User coordinates mapped to canonical form.
class PresentedGroup {
 public:
  explicit PresentedGroup(const GroupSpec& spec);
  const FgAbGroup& group() const noexcept { return cq_.group; }
  std::size_t user_generators() const noexcept { return moduli_.size(); }
  /// 0 for free generators.
  Int modulus(std::size_t i) const { return moduli_[i]; }
  Coords to_canonical(const Coords& user) const;
  Coords to_user(const Coords& canonical) const;
  const CanonicalQuotient& quotient() const noexcept { return cq_; }

 private:
  std::vector<Int> moduli_;
  CanonicalQuotient cq_;
};

/// Hom given in user coordinates; throws IllDefinedHom (with `path`) when a
/// relation of the source is not sent into the relations of the target.
GroupHom presented_hom(const PresentedGroup& source, const PresentedGroup& target,
                       const std::vector<std::vector<Int>>& rows, const std::string& path);

Complex2 to_complex2(const ComplexSpecFile& spec);
Complex3 to_complex3(const ComplexSpecFile& spec);
CrossedModule to_crossed_module(const ComplexSpecFile& spec);

}  // namespace unital::cli
