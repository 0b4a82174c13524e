#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "conway/classifier.hpp"
#include "conway/design.hpp"
#include "conway/group_analysis.hpp"
#include "conway/groupoid.hpp"
#include "conway/move_table.hpp"
#include "conway/two_graph.hpp"

namespace conway {

using Json = nlohmann::ordered_json;

struct PipelineOptions {
  Pt base = 0;
  std::uint64_t cap = 4'000'000;
  bool all_bases = false;
  int threads = 1;
};

struct MoveSummary {
  std::size_t distinct_count = 0;
  bool involutions_ok = false;
  bool support_sizes_ok = false;  // every non-identity move has support 2*lambda + 2
  bool count_formula_applies = false;
  bool count_formula_ok = false;  // |E| * 2 * (lambda + 1) == n * (n - 1)
};

struct LemmaCheck {
  bool applicable = false;
  CheckResult result;
};

struct LemmaSuite {
  LemmaCheck line_move_identity;      // needs the symmetric-difference closure
  LemmaCheck move_conjugation_rule;   // needs closure + regular two-graph
  LemmaCheck braid_orders;
  LemmaCheck conjugation_covariance;
};

/// Everything `check` computes: statistics, the two-graph report, move
/// invariants and the identity suite.
struct CheckAnalysis {
  DesignStats stats;
  bool index_built = false;
  TwoGraphReport two_graph;
  MoveSummary moves;
  LemmaSuite lemmas;
  bool all_pass = false;  // every applicable check passed
};

CheckAnalysis run_checks(const Design& d, int threads);

/// Everything `groupoid` computes on top of run_checks for one base point.
struct GroupoidAnalysis {
  Pt base = 0;
  HoleStabilizer pi;
  ConwayGroupoid groupoid;
  GroupoidGroupCheck group_check;
  AutomorphismCheck automorphisms;
  int moves_transitivity_degree = 0;
  bool moves_group_primitive = false;
  bool pi_transitive = false;
  bool pi_primitive = false;
  ThreeTranspositionReport three_transposition;
  ClassLabel label;
  ActionImplicationReport action_implications;
  FamilyParameterReport family_parameters;
  std::vector<std::uint64_t> all_base_pi_orders;  // --all-bases only
  bool all_pass = false;
};

GroupoidAnalysis run_groupoid(const Design& d, const CheckAnalysis& checks,
                              const PipelineOptions& opt);

Json check_report_json(const Design& d, const CheckAnalysis& a);
Json groupoid_report_json(const Design& d, const CheckAnalysis& a, const GroupoidAnalysis& g,
                          const PipelineOptions& opt);

}  // namespace conway
