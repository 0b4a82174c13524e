// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Usage: acceptance --cli <path-to-conway-binary> [--scratch <dir>]

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "conway/parallel.hpp"
#include "conway/report.hpp"

namespace fs = std::filesystem;
using namespace conway;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const std::string& name, bool ok, double secs, const std::string& detail = "") {
  std::cout << (ok ? "PASS " : "FAIL ") << name;
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.2f s)", secs);
  std::cout << buf;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

struct Expect {
  bool ok = true;
  std::string detail;
  void check(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

GroupoidAnalysis analyze(const Design& d, const CheckAnalysis& checks, std::uint64_t cap,
                         bool all_bases = false) {
  PipelineOptions opt;
  opt.cap = cap;
  opt.threads = resolve_threads(0);
  opt.all_bases = all_bases;
  return run_groupoid(d, checks, opt);
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

std::string g_cli;
fs::path g_scratch;

CliResult run_cli(const std::vector<std::string>& args, const std::string& tag) {
  fs::path out_file = g_scratch / (tag + ".out");
  std::string cmd = g_cli;
  for (const auto& a : args) cmd += " " + a;
  cmd += " > " + out_file.string() + " 2> " + (g_scratch / (tag + ".err")).string();
  int status = std::system(cmd.c_str());
  CliResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  res.out = buf.str();
  return res;
}

std::string write_design(const Design& d, const std::string& tag) {
  fs::path p = g_scratch / (tag + ".json");
  std::ofstream out(p, std::ios::binary);
  out << design_to_json_text(d);
  return p.string();
}

// -- criterion 1 ------------------------------------------------------------

void criterion_boolean() {
  auto start = Clock::now();
  Expect e;
  std::mt19937 rng(101);
  for (int m = 2; m <= 6 && e.ok; ++m) {
    Design d = boolean_design(m);
    auto checks = run_checks(d, resolve_threads(0));
    e.check(checks.stats.lambda == (1 << (m - 1)) - 1, "lambda mismatch at m=" + std::to_string(m));
    auto g = analyze(d, checks, 4'000'000);
    e.check(g.pi.order == 1, "stabilizer order at m=" + std::to_string(m));
    e.check(g.group_check.groupoid_size == (std::uint64_t{1} << m),
            "groupoid size at m=" + std::to_string(m));
    e.check(g.label.family == Family::boolean_family && g.label.m == m,
            "classification at m=" + std::to_string(m));

    std::vector<Pt> img(d.n);
    for (Pt i = 0; i < d.n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    auto rec = reconstruct_boolean(relabel(d, Perm(img)), 0);
    e.check(rec.ok && rec.m == m, "reconstruction at m=" + std::to_string(m));
  }
  double secs = seconds_since(start);
  e.check(secs < 10.0, "exceeded 10 s");
  report("criterion 1: boolean family m=2..6", e.ok, secs, e.detail);
}

// -- criterion 2 ------------------------------------------------------------

void criterion_orthogonal() {
  auto start = Clock::now();
  Expect e;
  struct Row {
    int m;
    Sign sign;
    Pt n;
    int lambda;
    std::uint64_t L, pi;
  };
  const Row rows[] = {
      {2, Sign::plus, 10, 2, 720, 72},
      {3, Sign::minus, 28, 5, 1451520, 51840},
      {3, Sign::plus, 36, 9, 1451520, 40320},
  };
  for (const Row& row : rows) {
    auto one = Clock::now();
    Design d = orthogonal_design(row.m, row.sign);
    e.check(d.n == row.n, "point count");
    auto checks = run_checks(d, resolve_threads(0));
    e.check(checks.stats.lambda == row.lambda, "lambda");
    auto g = analyze(d, checks, 4'000'000);
    e.check(g.pi.order == row.pi, "stabilizer order " + std::to_string(g.pi.order));
    e.check(g.pi.enumerated, "stabilizer not enumerated");
    e.check(g.group_check.groupoid_size == row.L, "groupoid size");
    e.check(g.groupoid.enumerated && g.groupoid.coset_check, "groupoid enumeration");
    e.check(g.label.family == Family::sp_family && g.label.m == row.m, "classification");
    e.check(seconds_since(one) < 180.0, "full enumeration exceeded 3 min");

    auto chain_start = Clock::now();
    auto g_chain = analyze(d, checks, 1);  // order-only mode
    e.check(g_chain.pi.order == row.pi && !g_chain.pi.enumerated, "chain-only order");
    e.check(seconds_since(chain_start) < 10.0, "chain-only exceeded 10 s");
  }
  report("criterion 2: orthogonal family orders", e.ok, seconds_since(start), e.detail);
}

// -- criterion 3 ------------------------------------------------------------

void criterion_symplectic() {
  auto start = Clock::now();
  Expect e;
  {
    Design d = symplectic_design(2);
    auto checks = run_checks(d, resolve_threads(0));
    e.check(d.n == 16 && checks.stats.lambda == 3, "m=2 parameters");
    auto g = analyze(d, checks, 4'000'000);
    e.check(g.group_check.groupoid_size == 11520, "m=2 groupoid size");
    e.check(g.pi.order == 720, "m=2 stabilizer order");
    e.check(g.label.family == Family::affine_sp_family && g.label.m == 2, "m=2 classification");
  }
  {
    auto m3 = Clock::now();
    Design d = symplectic_design(3);
    auto checks = run_checks(d, resolve_threads(0));
    auto g = analyze(d, checks, 1);  // chain-only
    e.check(g.group_check.generated_order == 92897280, "m=3 generated order");
    e.check(g.group_check.generated_order == std::uint64_t{64} * 1451520, "m=3 factorization");
    e.check(g.pi.order == 1451520, "m=3 stabilizer chain order");
    e.check(g.group_check.is_group, "m=3 group decision");
    e.check(seconds_since(m3) < 120.0, "m=3 exceeded 2 min");
  }
  report("criterion 3: symplectic family orders", e.ok, seconds_since(start), e.detail);
}

// -- criterion 4 ------------------------------------------------------------

void criterion_projective_plane() {
  auto start = Clock::now();
  Expect e;
  Design d = projective_plane_3();
  auto checks = run_checks(d, resolve_threads(0));
  e.check(checks.stats.lambda == 1, "lambda");
  e.check(checks.stats.is_supersimple, "supersimplicity");
  e.check(!checks.two_graph.is_regular, "two-graph should fail");
  e.check(!checks.two_graph.witness.empty(), "missing witness");
  auto g = analyze(d, checks, 4'000'000, /*all_bases=*/true);
  e.check(g.pi.order == 95040, "stabilizer order");
  e.check(g.all_base_pi_orders.size() == 13, "base sweep size");
  for (auto o : g.all_base_pi_orders) e.check(o == 95040, "base independence");
  e.check(g.group_check.groupoid_size == 1235520, "groupoid size");
  e.check(g.groupoid.enumerated && g.groupoid.coset_check, "coset enumeration");
  e.check(!g.group_check.is_group, "group decision");
  e.check(g.group_check.generated_order > g.group_check.groupoid_size, "group evidence");
  e.check(g.pi_primitive, "stabilizer primitivity");
  e.check(g.label.family == Family::exotic_m13_candidate, "classification");
  double secs = seconds_since(start);
  e.check(secs < 120.0, "exceeded 2 min");
  report("criterion 4: projective plane of order 3", e.ok, secs, e.detail);
}

// -- criteria 5 + 6 ---------------------------------------------------------

struct SuiteEntry {
  Design d;
  std::size_t move_count;
  bool run_lemmas;
};

std::vector<SuiteEntry> identity_suite() {
  std::vector<SuiteEntry> out;
  for (int m = 2; m <= 6; ++m)
    out.push_back({boolean_design(m), (std::size_t{1} << m) - 1, m <= 4});
  out.push_back({symplectic_design(2), 30, true});
  out.push_back({orthogonal_design(2, Sign::plus), 15, true});
  out.push_back({orthogonal_design(3, Sign::minus), 63, true});
  out.push_back({orthogonal_design(3, Sign::plus), 63, true});
  out.push_back({projective_plane_3(), 39, false});
  return out;
}

void criterion_identity_suites() {
  auto start = Clock::now();
  Expect e;
  for (const auto& entry : identity_suite()) {
    if (!entry.run_lemmas) continue;
    auto checks = run_checks(entry.d, resolve_threads(0));
    e.check(checks.lemmas.line_move_identity.applicable &&
                checks.lemmas.line_move_identity.result.ok,
            entry.d.name + ": line move identity");
    e.check(checks.lemmas.move_conjugation_rule.applicable &&
                checks.lemmas.move_conjugation_rule.result.ok,
            entry.d.name + ": conjugation rewrite");
    e.check(checks.lemmas.braid_orders.applicable && checks.lemmas.braid_orders.result.ok,
            entry.d.name + ": braid orders");
    e.check(checks.lemmas.conjugation_covariance.applicable &&
                checks.lemmas.conjugation_covariance.result.ok,
            entry.d.name + ": conjugation covariance");
  }
  double secs = seconds_since(start);
  e.check(secs < 300.0, "exceeded 5 min");
  report("criterion 5: identity suites, zero counterexamples", e.ok, secs, e.detail);
}

void criterion_counting() {
  auto start = Clock::now();
  Expect e;
  for (const auto& entry : identity_suite()) {
    auto stats = validate(entry.d);
    auto idx = collinearity_index(entry.d, stats);
    MoveTable t(entry.d, idx);
    e.check(t.distinct_moves().size() == entry.move_count, entry.d.name + ": move count");
    e.check(t.distinct_moves().size() * 2 * (stats.lambda + 1) ==
                std::size_t{entry.d.n} * (entry.d.n - 1),
            entry.d.name + ": count formula");
    auto tg = two_graph_report(entry.d.n, idx.collinear_triples(), resolve_threads(0));
    if (tg.is_regular) {
      e.check(tg.n_even, entry.d.name + ": n parity");
      e.check(tg.s_constant, entry.d.name + ": coherence constant");
      e.check(6 * stats.lambda - 2 * tg.s == entry.d.n, entry.d.name + ": n = 6*lambda - 2*s");
    }
  }
  report("criterion 6: counting identities", e.ok, seconds_since(start), e.detail);
}

// -- criterion 7 ------------------------------------------------------------

void criterion_action_implications() {
  auto start = Clock::now();
  Expect e;
  struct Row {
    Design d;
    bool expect_group, expect_two_graph;
    std::uint64_t cap;
  };
  std::vector<Row> rows;
  rows.push_back({orthogonal_design(2, Sign::plus), true, true, 4'000'000});
  rows.push_back({orthogonal_design(3, Sign::minus), true, true, 1});
  rows.push_back({orthogonal_design(3, Sign::plus), true, true, 1});
  rows.push_back({symplectic_design(2), true, true, 4'000'000});
  rows.push_back({symplectic_design(3), true, true, 1});
  rows.push_back({projective_plane_3(), false, false, 1});
  for (auto& row : rows) {
    auto checks = run_checks(row.d, resolve_threads(0));
    auto g = analyze(row.d, checks, row.cap);
    e.check(g.action_implications.applicable, row.d.name + ": applicability");
    e.check(g.action_implications.all_hold, row.d.name + ": implications");
    // Antecedent expectations keep the suite honest about vacuous rows.
    e.check(g.action_implications.parts.size() == 3, row.d.name + ": part count");
    e.check(g.action_implications.parts[0].antecedent == row.expect_group, row.d.name + ": group antecedent");
    e.check(g.action_implications.parts[1].antecedent == row.expect_two_graph,
            row.d.name + ": two-graph antecedent");
    if (row.expect_group && row.expect_two_graph) {
      for (const auto& part : g.action_implications.parts)
        e.check(part.antecedent && part.consequent, row.d.name + ": non-vacuous " + part.name);
    }
  }
  report("criterion 7: action implication suite", e.ok, seconds_since(start), e.detail);
}

// -- criterion 8 ------------------------------------------------------------

void criterion_triangle_property() {
  auto start = Clock::now();
  Expect e;
  std::vector<Design> small;
  small.push_back(orthogonal_design(2, Sign::plus));
  small.push_back(symplectic_design(2));
  small.push_back(orthogonal_design(3, Sign::minus));
  small.push_back(orthogonal_design(3, Sign::plus));
  for (const Design& d : small) {
    auto stats = validate(d);
    auto idx = collinearity_index(d, stats);
    for (Pt base = 0; base < d.n && e.ok; ++base) {
      auto rep = triangle_report(derived_graph(d, idx, base), resolve_threads(0));
      e.check(rep.has_strong_triangle_property,
              d.name + " base " + std::to_string(base) + ": strong triangle property");
      if (rep.has_strong_triangle_property)
        e.check(verify_f_lines(d, base, rep),
                d.name + " base " + std::to_string(base) + ": f-lines");
    }
  }
  {
    Design d = symplectic_design(3);
    auto stats = validate(d);
    auto idx = collinearity_index(d, stats);
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> pick(0, d.n - 1);
    for (int trial = 0; trial < 5; ++trial) {
      Pt base = static_cast<Pt>(pick(rng));
      auto rep = triangle_report(derived_graph(d, idx, base), resolve_threads(0));
      e.check(rep.has_strong_triangle_property,
              d.name + " base " + std::to_string(base) + ": strong triangle property");
      if (rep.has_strong_triangle_property)
        e.check(verify_f_lines(d, base, rep), d.name + " base " + std::to_string(base) + ": f-lines");
    }
  }
  report("criterion 8: strong triangle property and f-lines", e.ok, seconds_since(start), e.detail);
}

// -- criterion 9 ------------------------------------------------------------

void criterion_determinism() {
  auto start = Clock::now();
  Expect e;

  // (a) identical report bytes across thread counts, via the CLI.
  for (const char* fam : {"symplectic_m2", "orthogonal_m2_plus"}) {
    Design d = std::string(fam) == "symplectic_m2" ? symplectic_design(2)
                                                   : orthogonal_design(2, Sign::plus);
    std::string file = write_design(d, fam);
    std::string first;
    for (int threads : {1, 2, 8}) {
      auto res = run_cli({"--threads", std::to_string(threads), "groupoid", file},
                         std::string(fam) + "_t" + std::to_string(threads));
      e.check(res.exit_code == 0, std::string(fam) + ": groupoid exit code");
      if (first.empty())
        first = res.out;
      else
        e.check(res.out == first, std::string(fam) + ": report bytes differ across threads");
    }
    auto repeat = run_cli({"--threads", "2", "groupoid", file}, std::string(fam) + "_repeat");
    e.check(repeat.out == first, std::string(fam) + ": report bytes differ across runs");
  }

  // (b) coset-union groupoid equals the direct walk on every small design.
  std::vector<Design> smalls;
  smalls.push_back(boolean_design(2));
  smalls.push_back(boolean_design(3));
  smalls.push_back(boolean_design(4));
  smalls.push_back(orthogonal_design(2, Sign::plus));
  smalls.push_back(projective_plane_3());
  smalls.push_back(symplectic_design(2));
  for (const Design& d : smalls) {
    auto stats = validate(d);
    auto idx = collinearity_index(d, stats);
    MoveTable t(d, idx);
    auto pi = hole_stabilizer(t, 0, 4'000'000, resolve_threads(0));
    auto via_cosets = conway_groupoid(t, 0, pi, 4'000'000, resolve_threads(0));
    auto via_walk = conway_groupoid_direct(t, 0, 4'000'000);
    e.check(via_cosets.enumerated && via_walk.enumerated, d.name + ": enumeration");
    e.check(via_cosets.size == via_walk.size, d.name + ": size mismatch");
    bool equal = via_cosets.size == via_walk.size;
    for (std::uint32_t i = 0; equal && i < via_cosets.elements->size(); ++i)
      equal = via_walk.elements->contains(via_cosets.elements->at(i));
    e.check(equal, d.name + ": element sets differ");

    // (c) chain order equals enumerated order wherever both exist.
    auto reduced = reduce_generators(pi.generators, d.n);
    e.check(reduced.chain.order() == pi.order, d.name + ": stabilizer chain vs enumeration");
    auto moves_closure = enumerate_group(t.distinct_moves(), d.n, 4'000'000);
    if (moves_closure.complete) {
      auto moves_chain = stabilizer_chain(t.distinct_moves(), d.n);
      e.check(moves_chain.order() == moves_closure.order, d.name + ": move group chain vs closure");
    }
  }
  report("criterion 9: determinism and dual-route checks", e.ok, seconds_since(start), e.detail);
}

// -- CLI contract ------------------------------------------------------------

void cli_contract() {
  auto start = Clock::now();
  Expect e;

  auto gen = run_cli({"generate", "boolean", "--m", "3", "-o",
                      (g_scratch / "bool3.json").string()},
                     "gen_bool3");
  e.check(gen.exit_code == 0, "generate boolean exit");
  {
    std::ifstream in(g_scratch / "bool3.json");
    std::ostringstream buf;
    buf << in.rdbuf();
    Design d = design_from_json_text(buf.str());
    e.check(d.n == 8 && d.blocks.size() == 14, "generated boolean file contents");
    e.check(!buf.str().empty() && buf.str().back() == '\n', "file ends with newline");
  }
  auto chk = run_cli({"check", (g_scratch / "bool3.json").string()}, "check_bool3");
  e.check(chk.exit_code == 0, "check boolean exit");

  auto degenerate = run_cli({"generate", "orthogonal", "--m", "2", "--sign", "minus", "-o",
                             (g_scratch / "degenerate.json").string()},
                            "gen_degenerate");
  e.check(degenerate.exit_code == 2, "degenerate orthogonal family must exit 2");

  std::ofstream bad(g_scratch / "dup.json");
  bad << R"({"name":"dup","n":6,"blocks":[[0,1,2,3],[0,1,2,3]]})" << "\n";
  bad.close();
  auto dup = run_cli({"check", (g_scratch / "dup.json").string()}, "check_dup");
  e.check(dup.exit_code == 2, "duplicate block must exit 2");

  std::string plane = write_design(projective_plane_3(), "pg23");
  auto plane_chk = run_cli({"check", plane}, "check_pg23");
  e.check(plane_chk.exit_code == 1, "plane check must exit 1");
  auto plane_expected =
      run_cli({"check", plane, "--expect", "two_graph=fail"}, "check_pg23_expect");
  e.check(plane_expected.exit_code == 0, "plane check with expectation must exit 0");

  auto pg_gen = run_cli({"generate", "pg23"}, "gen_pg23_stdout");
  e.check(pg_gen.exit_code == 0 && !pg_gen.out.empty(), "generate to stdout");

  report("cli: exit-code and format contract", e.ok, seconds_since(start), e.detail);
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--cli") g_cli = argv[i + 1];
    if (flag == "--scratch") g_scratch = argv[i + 1];
  }
  if (g_scratch.empty()) {
    g_scratch = fs::temp_directory_path() / "conway_acceptance";
  }
  fs::create_directories(g_scratch);

  criterion_boolean();
  criterion_orthogonal();
  criterion_symplectic();
  criterion_projective_plane();
  criterion_identity_suites();
  criterion_counting();
  criterion_action_implications();
  criterion_triangle_property();
  if (!g_cli.empty()) {
    criterion_determinism();
    cli_contract();
  } else {
    std::cout << "FAIL criterion 9: determinism and dual-route checks (0.00 s) -- no --cli given\n";
    ++g_failures;
  }

  if (g_failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " criteria failed\n";
  return 1;
}
