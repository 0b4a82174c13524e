#include "conway/classifier.hpp"

#include <bit>

namespace conway {

std::string family_name(Family f) {
  switch (f) {
    case Family::boolean_family: return "BOOLEAN";
    case Family::sp_family: return "SP";
    case Family::affine_sp_family: return "AFFINE_SP";
    case Family::exotic_m13_candidate: return "EXOTIC_M13_CANDIDATE";
    case Family::unclassified: return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

namespace {

bool power_of_two_exponent(std::uint64_t v, int& m) {
  if (v == 0 || (v & (v - 1)) != 0) return false;
  m = std::countr_zero(v);
  return true;
}

// n = 2^{m-1}(2^m + s) for s in {+1, -1}.
bool sp_point_count(Pt n, int& m, Sign& sign) {
  for (int mm = 2; (1u << (2 * mm - 1)) <= 2u * n; ++mm) {
    std::uint64_t lo = (std::uint64_t{1} << (mm - 1)) * ((std::uint64_t{1} << mm) - 1);
    std::uint64_t hi = (std::uint64_t{1} << (mm - 1)) * ((std::uint64_t{1} << mm) + 1);
    if (lo == n) {
      m = mm;
      sign = Sign::minus;
      return true;
    }
    if (hi == n) {
      m = mm;
      sign = Sign::plus;
      return true;
    }
  }
  return false;
}

std::string eq(const std::string& what, std::uint64_t got) {
  return what + "=" + std::to_string(got);
}

}  // namespace

ClassLabel classify(const ClassifyInputs& in) {
  ClassLabel out;
  bool hypotheses = in.supersimple && in.triangle_delta && in.two_graph_regular;

  int m = 0;
  Sign sign = Sign::plus;
  if (hypotheses) {
    if (power_of_two_exponent(in.n, m) && in.pi_order == 1 &&
        in.groupoid_size == (std::uint64_t{1} << m)) {
      out.family = Family::boolean_family;
      out.m = m;
      out.evidence = {eq("n", in.n), eq("pi_order", in.pi_order), eq("L_size", in.groupoid_size),
                      "is_group=" + std::string(in.is_group ? "true" : "false")};
      return out;
    }
    if (power_of_two_exponent(in.n, m) && m % 2 == 0 && in.is_group &&
        in.groupoid_size == (std::uint64_t{1} << m) * sp_order(m / 2) &&
        in.pi_order == sp_order(m / 2)) {
      out.family = Family::affine_sp_family;
      out.m = m / 2;
      out.evidence = {eq("n", in.n), eq("pi_order", in.pi_order), eq("L_size", in.groupoid_size),
                      eq("sp_order", sp_order(m / 2))};
      return out;
    }
    if (sp_point_count(in.n, m, sign) && in.is_group && in.groupoid_size == sp_order(m) &&
        in.pi_order == o_order(m, sign)) {
      out.family = Family::sp_family;
      out.m = m;
      out.evidence = {eq("n", in.n), eq("pi_order", in.pi_order), eq("L_size", in.groupoid_size),
                      eq("sp_order", sp_order(m)),
                      std::string("sign=") + sign_char(sign)};
      return out;
    }
    out.evidence = {"verified hypotheses but no family matched"};
    return out;
  }

  if (!in.is_group && in.pi_primitive) {
    out.family = Family::exotic_m13_candidate;
    out.evidence = {eq("n", in.n), eq("pi_order", in.pi_order), eq("L_size", in.groupoid_size),
                    "is_group=false", "pi_primitive=true"};
    return out;
  }
  out.evidence = {"hypotheses not verified"};
  return out;
}

ActionImplicationReport verify_action_implications(const ActionImplicationInputs& in) {
  ActionImplicationReport rep;
  if (in.n <= 2 * in.lambda + 2) {
    rep.reason = "hypothesis n > 2*lambda + 2 fails, skipped";
    return rep;
  }
  rep.applicable = true;
  rep.parts.push_back({"group_implies_primitive", in.is_group, in.moves_group_primitive,
                       !in.is_group || in.moves_group_primitive});
  rep.parts.push_back({"two_graph_implies_stabilizer_transitive", in.two_graph_regular,
                       in.pi_transitive, !in.two_graph_regular || in.pi_transitive});
  bool both = in.two_graph_regular && in.is_group;
  rep.parts.push_back(
      {"both_imply_stabilizer_primitive", both, in.pi_primitive, !both || in.pi_primitive});
  rep.all_hold = true;
  for (const auto& p : rep.parts) rep.all_hold = rep.all_hold && p.holds;
  return rep;
}

FamilyParameterReport verify_family_parameters(const Design& d, const DesignStats& stats,
                                bool two_graph_regular) {
  FamilyParameterReport rep;
  if (!stats.is_2_design || !stats.is_supersimple || !stats.triangle_delta || !two_graph_regular) {
    rep.reason = "inapplicable: hypotheses not verified";
    return rep;
  }
  rep.applicable = true;

  if (d.n == 2 * stats.lambda + 2) {
    rep.branch = 'a';
    auto rec = reconstruct_boolean(d, 0);
    rep.reconstruction_ok = rec.ok;
    rep.m = rec.m;
    rep.params_ok = rec.ok && (std::uint64_t{1} << rec.m) == d.n;
    if (!rec.ok) rep.reason = rec.reason;
    return rep;
  }

  int m = 0;
  if (power_of_two_exponent(d.n, m) && m % 2 == 0) {
    rep.branch = 'b';
    rep.m = m / 2;
    std::uint64_t f_prev = std::uint64_t{1} << (2 * (rep.m - 1));
    rep.params_ok = stats.lambda == static_cast<int>(f_prev) - 1;
    if (!rep.params_ok) rep.reason = "lambda does not match the affine parameter";
    return rep;
  }
  Sign sign = Sign::plus;
  if (sp_point_count(d.n, m, sign)) {
    rep.branch = 'c';
    rep.m = m;
    rep.sign = sign;
    std::uint64_t f_prev =
        (std::uint64_t{1} << (m - 2)) *
        ((std::uint64_t{1} << (m - 1)) + (sign == Sign::plus ? 1 : -1));
    rep.params_ok = stats.lambda == static_cast<int>(f_prev) - 1;
    if (!rep.params_ok) rep.reason = "lambda does not match the orthogonal parameter";
    return rep;
  }
  rep.reason = "point count matches no family";
  return rep;
}

}  // namespace conway
