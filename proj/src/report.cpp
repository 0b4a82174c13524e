#include "conway/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace conway {

CheckAnalysis run_checks(const Design& d, int threads) {
  CheckAnalysis a;
  a.stats = validate(d);
  if (!a.stats.is_2_design || !a.stats.is_supersimple) {
    a.all_pass = false;
    return a;
  }
  CollinearityIndex idx = collinearity_index(d, a.stats);
  a.index_built = true;
  a.two_graph = two_graph_report(d.n, idx.collinear_triples(), threads);

  MoveTable table(d, idx);
  a.moves.distinct_count = table.distinct_moves().size();
  a.moves.involutions_ok = true;
  a.moves.support_sizes_ok = true;
  for (const Perm& g : table.distinct_moves()) {
    if (g.order() != 2) a.moves.involutions_ok = false;
    if (g.support().size() != static_cast<std::size_t>(2 * a.stats.lambda + 2))
      a.moves.support_sizes_ok = false;
  }
  a.moves.count_formula_applies = a.stats.triangle_delta;
  a.moves.count_formula_ok =
      a.moves.distinct_count * 2 * (a.stats.lambda + 1) == std::size_t{d.n} * (d.n - 1);

  bool hyp = a.stats.triangle_delta && a.two_graph.is_regular;
  a.lemmas.line_move_identity.applicable = a.stats.triangle_delta;
  if (a.stats.triangle_delta)
    a.lemmas.line_move_identity.result = check_line_move_identity(d, table, threads);
  a.lemmas.move_conjugation_rule.applicable = hyp;
  a.lemmas.braid_orders.applicable = hyp;
  a.lemmas.conjugation_covariance.applicable = hyp;
  if (hyp) {
    a.lemmas.move_conjugation_rule.result = check_move_conjugation_rule(idx, table, threads);
    a.lemmas.braid_orders.result = check_braid_orders(idx, table, threads);
    a.lemmas.conjugation_covariance.result = check_conjugation_covariance(table, threads);
  }

  a.all_pass = a.stats.is_2_design && a.stats.is_supersimple && a.moves.involutions_ok &&
               a.moves.support_sizes_ok &&
               (!a.moves.count_formula_applies || a.moves.count_formula_ok) &&
               a.two_graph.is_regular;
  for (const LemmaCheck* c : {&a.lemmas.line_move_identity, &a.lemmas.move_conjugation_rule,
                              &a.lemmas.braid_orders, &a.lemmas.conjugation_covariance})
    if (c->applicable && !c->result.ok) a.all_pass = false;
  return a;
}

GroupoidAnalysis run_groupoid(const Design& d, const CheckAnalysis& checks,
                              const PipelineOptions& opt) {
  if (!checks.index_built)
    throw std::invalid_argument("groupoid pipeline requires a supersimple 2-design");
  GroupoidAnalysis g;
  g.base = opt.base;
  CollinearityIndex idx = collinearity_index(d, checks.stats);
  MoveTable table(d, idx);

  g.pi = hole_stabilizer(table, opt.base, opt.cap, opt.threads);
  g.groupoid = conway_groupoid(table, opt.base, g.pi, opt.cap, opt.threads);
  g.group_check = groupoid_group_check(table, opt.base, g.pi);
  g.automorphisms = moves_preserve_blocks(d, table, opt.threads);

  auto moves_reduced = reduce_generators(table.distinct_moves(), d.n);
  g.moves_transitivity_degree = transitivity_degree(moves_reduced.chain);
  g.moves_group_primitive = g.group_check.moves_transitive &&
                            is_primitive(moves_reduced.generators, d.n);

  // Hole-stabilizer action on the points other than the base.
  std::vector<Perm> pi_restricted;
  for (const Perm& p : g.pi.reduced_generators) pi_restricted.push_back(restrict_away(p, opt.base));
  if (d.n >= 2) {
    g.pi_transitive = !pi_restricted.empty() &&
                      is_transitive(pi_restricted, static_cast<Pt>(d.n - 1));
    g.pi_primitive = g.pi_transitive && is_primitive(pi_restricted, static_cast<Pt>(d.n - 1));
  }

  g.three_transposition =
      three_transposition_report(table.distinct_moves(), g.group_check.groupoid_size, opt.threads);

  ClassifyInputs ci;
  ci.n = d.n;
  ci.lambda = checks.stats.lambda;
  ci.supersimple = checks.stats.is_supersimple;
  ci.triangle_delta = checks.stats.triangle_delta;
  ci.two_graph_regular = checks.two_graph.is_regular;
  ci.pi_order = g.pi.order;
  ci.groupoid_size = g.group_check.groupoid_size;
  ci.is_group = g.group_check.is_group;
  ci.pi_primitive = g.pi_primitive;
  g.label = classify(ci);

  ActionImplicationInputs ta;
  ta.n = d.n;
  ta.lambda = checks.stats.lambda;
  ta.is_group = g.group_check.is_group;
  ta.two_graph_regular = checks.two_graph.is_regular;
  ta.moves_group_primitive = g.moves_group_primitive;
  ta.pi_transitive = g.pi_transitive;
  ta.pi_primitive = g.pi_primitive;
  g.action_implications = verify_action_implications(ta);
  g.family_parameters = verify_family_parameters(d, checks.stats, checks.two_graph.is_regular);

  if (opt.all_bases) {
    for (Pt b = 0; b < d.n; ++b) {
      if (b == opt.base) {
        g.all_base_pi_orders.push_back(g.pi.order);
        continue;
      }
      // Chain order only; enumeration of every base would be wasteful.
      HoleStabilizer other = hole_stabilizer(table, b, 0, opt.threads);
      g.all_base_pi_orders.push_back(other.order);
    }
  }

  bool hypotheses = checks.stats.triangle_delta && checks.two_graph.is_regular &&
                    checks.stats.is_supersimple;
  g.all_pass = (!g.action_implications.applicable || g.action_implications.all_hold) &&
               (!g.groupoid.enumerated || g.groupoid.coset_check);
  if (hypotheses) {
    g.all_pass = g.all_pass && g.label.family != Family::unclassified && g.automorphisms.ok &&
                 g.three_transposition.orders_ok &&
                 (!g.family_parameters.applicable || g.family_parameters.params_ok);
  }
  for (std::uint64_t o : g.all_base_pi_orders)
    if (o != g.pi.order) g.all_pass = false;
  return g;
}

namespace {

Json check_result_json(const LemmaCheck& c) {
  Json j;
  if (!c.applicable) {
    j["status"] = "skipped";
    j["reason"] = "hypotheses not satisfied";
    return j;
  }
  j["status"] = c.result.ok ? "pass" : "fail";
  j["checked"] = c.result.checked;
  if (!c.result.ok) j["witness"] = c.result.witness;
  return j;
}

Json stats_json(const DesignStats& s) {
  Json j;
  j["is_2_design"] = s.is_2_design;
  j["lambda"] = s.lambda;
  if (!s.is_2_design) {
    j["lambda_min"] = s.lambda_min;
    j["lambda_max"] = s.lambda_max;
  }
  j["is_supersimple"] = s.is_supersimple;
  j["triangle_delta"] = s.triangle_delta;
  j["block_count"] = s.block_count;
  if (!s.issue.empty()) j["issue"] = s.issue;
  return j;
}

Json two_graph_json(const TwoGraphReport& r) {
  Json j;
  j["is_regular_two_graph"] = r.is_regular;
  j["mu"] = r.mu_constant ? Json(r.mu) : Json("non-constant");
  j["s"] = r.s_constant ? Json(r.s) : Json("non-constant");
  j["identity_n_eq"] = r.identity_ok;
  j["n_even"] = r.n_even;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

Json design_json(const Design& d) {
  Json j;
  j["name"] = d.name;
  j["n"] = d.n;
  j["block_count"] = d.blocks.size();
  return j;
}

}  // namespace

Json check_report_json(const Design& d, const CheckAnalysis& a) {
  Json j;
  j["schema"] = 1;
  j["design"] = design_json(d);
  j["stats"] = stats_json(a.stats);
  if (a.index_built) {
    j["two_graph"] = two_graph_json(a.two_graph);
    Json m;
    m["distinct_count"] = a.moves.distinct_count;
    m["involutions_ok"] = a.moves.involutions_ok;
    m["support_sizes_ok"] = a.moves.support_sizes_ok;
    m["count_formula"] = a.moves.count_formula_applies
                             ? Json(a.moves.count_formula_ok ? "pass" : "fail")
                             : Json("skipped");
    j["moves"] = m;
    Json l;
    l["line_move_identity"] = check_result_json(a.lemmas.line_move_identity);
    l["move_conjugation_rule"] = check_result_json(a.lemmas.move_conjugation_rule);
    l["braid_orders"] = check_result_json(a.lemmas.braid_orders);
    l["conjugation_covariance"] = check_result_json(a.lemmas.conjugation_covariance);
    j["lemmas"] = l;
  }
  j["all_pass"] = a.all_pass;
  return j;
}

Json groupoid_report_json(const Design& d, const CheckAnalysis& a, const GroupoidAnalysis& g,
                          const PipelineOptions& opt) {
  Json j = check_report_json(d, a);
  j.erase("all_pass");

  Json gr;
  gr["base"] = g.base;
  gr["pi_order"] = g.pi.order;
  gr["pi_enumerated"] = g.pi.enumerated;
  gr["L_size"] = g.group_check.groupoid_size;
  gr["L_enumerated"] = g.groupoid.enumerated;
  gr["is_group"] = g.group_check.is_group;
  gr["is_automorphism_group"] = g.automorphisms.ok;
  gr["coset_check"] = g.groupoid.enumerated ? Json(g.groupoid.coset_check) : Json("skipped");
  gr["generated_group_order"] = g.group_check.generated_order;
  if (!g.all_base_pi_orders.empty()) gr["all_base_pi_orders"] = g.all_base_pi_orders;
  j["groupoid"] = gr;

  Json an;
  an["group_order"] = g.group_check.generated_order;
  an["transitivity_degree"] = g.moves_transitivity_degree;
  an["primitive"] = g.moves_group_primitive;
  an["pi_transitive"] = g.pi_transitive;
  an["pi_primitive"] = g.pi_primitive;
  Json tt;
  tt["generates"] = g.three_transposition.generates;
  tt["class_closed"] = g.three_transposition.class_closed;
  tt["single_class"] = g.three_transposition.single_class;
  tt["orders_ok"] = g.three_transposition.orders_ok;
  an["three_transposition"] = tt;
  j["group_analysis"] = an;

  Json cl;
  cl["family"] = family_name(g.label.family);
  cl["m"] = g.label.m;
  cl["evidence"] = g.label.evidence;
  j["classification"] = cl;

  Json ta;
  ta["applicable"] = g.action_implications.applicable;
  if (!g.action_implications.applicable) {
    ta["reason"] = g.action_implications.reason;
  } else {
    Json parts = Json::array();
    for (const auto& p : g.action_implications.parts) {
      Json pj;
      pj["name"] = p.name;
      pj["antecedent"] = p.antecedent;
      pj["consequent"] = p.consequent;
      pj["holds"] = p.holds;
      parts.push_back(pj);
    }
    ta["parts"] = parts;
    ta["all_hold"] = g.action_implications.all_hold;
  }
  j["action_implications"] = ta;

  Json tc;
  tc["applicable"] = g.family_parameters.applicable;
  if (!g.family_parameters.applicable) {
    tc["reason"] = g.family_parameters.reason;
  } else {
    tc["branch"] = g.family_parameters.branch == 'a'   ? "boolean"
                   : g.family_parameters.branch == 'b' ? "affine"
                                                       : "orthogonal";
    tc["m"] = g.family_parameters.m;
    if (g.family_parameters.branch == 'c') tc["sign"] = std::string(1, sign_char(g.family_parameters.sign));
    tc["params_ok"] = g.family_parameters.params_ok;
    if (g.family_parameters.branch == 'a') tc["reconstruction_ok"] = g.family_parameters.reconstruction_ok;
    // Family identification is certified at the parameter and invariant
    // level; design isomorphism itself is out of scope.
    tc["certifies"] = "parameters";
  }
  j["family_parameters"] = tc;

  j["options"] = Json{{"cap", opt.cap}, {"all_bases", opt.all_bases}};
  j["all_pass"] = g.all_pass;
  return j;
}

}  // namespace conway
