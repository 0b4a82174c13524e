#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conway/group_analysis.hpp"
#include "conway/move_table.hpp"
#include "conway/perm_set.hpp"

namespace conway {

/// The group of move sequences returning to the base point, generated by
/// the return paths base,x,y,base. Elements are enumerated when the order
/// fits under the cap; the order itself always comes from a chain over the
/// full generator set.
struct HoleStabilizer {
  Pt base = 0;
  std::vector<Perm> generators;          // deduplicated, identity dropped, sorted
  std::vector<Perm> reduced_generators;  // verified minimal generating subset
  std::uint64_t order = 0;
  bool enumerated = false;
  std::optional<PermWordSet> elements;
};

HoleStabilizer hole_stabilizer(const MoveTable& t, Pt base, std::uint64_t cap, int threads = 1);

/// All move sequences starting at the base point: the union of the cosets
/// stabilizer * move(base, x) over x. size is n * |stabilizer| always;
/// elements are present when that fits under the cap.
struct ConwayGroupoid {
  Pt base = 0;
  std::uint64_t size = 0;
  bool enumerated = false;
  bool coset_check = false;  // cosets disjoint and every element maps base to its coset point
  std::optional<PermWordSet> elements;
};

ConwayGroupoid conway_groupoid(const MoveTable& t, Pt base, const HoleStabilizer& pi,
                               std::uint64_t cap, int threads = 1);

// Independent route: breadth-first walk over (element, endpoint) states
// expanding by every move at the current endpoint.
ConwayGroupoid conway_groupoid_direct(const MoveTable& t, Pt base, std::uint64_t cap);

struct GroupoidGroupCheck {
  bool is_group = false;
  std::uint64_t generated_order = 0;  // order of the group generated by all moves
  std::uint64_t groupoid_size = 0;
  bool moves_transitive = false;
  bool stabilizer_matches = false;  // point stabilizer order equals the hole stabilizer order
};

GroupoidGroupCheck groupoid_group_check(const MoveTable& t, Pt base, const HoleStabilizer& pi);

struct AutomorphismCheck {
  bool ok = true;
  std::string witness;
};

// Every distinct move maps blocks to blocks (generators suffice).
AutomorphismCheck moves_preserve_blocks(const Design& d, const MoveTable& t, int threads = 1);

}  // namespace conway
