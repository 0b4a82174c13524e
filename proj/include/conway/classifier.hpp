#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conway/design.hpp"

namespace conway {

enum class Family {
  boolean_family,       // n = 2^m, groupoid elementary abelian, trivial stabilizer
  sp_family,            // n = 2^{m-1}(2^m +- 1), groupoid of symplectic order
  affine_sp_family,     // n = 2^{2m}, groupoid of affine symplectic order
  exotic_m13_candidate, // not a group while the hole stabilizer is primitive
  unclassified
};

std::string family_name(Family f);

struct ClassLabel {
  Family family = Family::unclassified;
  int m = 0;
  std::vector<std::string> evidence;
};

struct ClassifyInputs {
  Pt n = 0;
  int lambda = 0;
  bool supersimple = false;
  bool triangle_delta = false;
  bool two_graph_regular = false;
  std::uint64_t pi_order = 0;
  std::uint64_t groupoid_size = 0;
  bool is_group = false;
  bool pi_primitive = false;
};

ClassLabel classify(const ClassifyInputs& in);

struct Implication {
  std::string name;
  bool antecedent = false;
  bool consequent = false;
  bool holds = false;  // !antecedent || consequent
};

struct ActionImplicationReport {
  bool applicable = false;  // requires n > 2*lambda + 2
  std::string reason;
  std::vector<Implication> parts;
  bool all_hold = false;
};

struct ActionImplicationInputs {
  Pt n = 0;
  int lambda = 0;
  bool is_group = false;
  bool two_graph_regular = false;
  bool moves_group_primitive = false;  // group generated by all moves, on all points
  bool pi_transitive = false;          // hole stabilizer on the other points
  bool pi_primitive = false;
};

// The three implications: group => primitive; regular two-graph =>
// stabilizer transitive; both => stabilizer primitive. Antecedents and
// consequents are evaluated independently.
ActionImplicationReport verify_action_implications(const ActionImplicationInputs& in);

struct FamilyParameterReport {
  bool applicable = false;  // requires supersimple + triangle-delta + regular two-graph
  std::string reason;
  char branch = '?';        // 'a' power of two, 'b' affine, 'c' orthogonal parameters
  int m = 0;
  Sign sign = Sign::plus;   // branch 'c' only
  bool params_ok = false;
  bool reconstruction_ok = false;  // branch 'a' only
};

// Parameter-level check that (n, lambda) matches one of the three families,
// with the Boolean branch certified by explicit reconstruction.
FamilyParameterReport verify_family_parameters(const Design& d, const DesignStats& stats, bool two_graph_regular);

}  // namespace conway
