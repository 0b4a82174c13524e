#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conway/perm.hpp"
#include "conway/perm_set.hpp"

namespace conway {

/// Deterministic base-and-strong-generators chain with explicit
/// transversals. A strong generator fixing the first i base points feeds
/// the orbits of every level up to i; verification walks bottom-up until
/// every Schreier generator sifts to the identity.
class StabChain {
 public:
  explicit StabChain(Pt degree) : degree_(degree) {}

  Pt degree() const { return degree_; }
  bool contains(const Perm& g) const;
  void extend(const Perm& g);  // no-op when g is already a member
  std::uint64_t order() const;  // throws std::overflow_error past 64 bits
  std::vector<Pt> base() const;
  std::vector<std::size_t> orbit_sizes() const;

 private:
  struct Level {
    Pt beta = 0;
    std::vector<Pt> orbit;                 // BFS order from beta
    std::vector<std::int32_t> slot;        // point -> transversal index, -1 outside
    std::vector<Perm> transversal;         // slot i maps beta to orbit[i]
  };

  std::vector<const Perm*> level_gens(std::size_t lvl) const;
  void insert_residue(const Perm& g, std::size_t lvl);
  void rebuild_orbit(std::size_t lvl);
  bool find_schreier_violation(std::size_t lvl, Perm& residue, std::size_t& stuck_at) const;
  // Sifts g through levels from `from`; returns the residue and the level
  // it stopped at (levels_.size() when fully sifted).
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;

  Pt degree_;
  std::vector<Perm> strong_gens_;
  std::vector<Level> levels_;
};

StabChain stabilizer_chain(const std::vector<Perm>& gens, Pt degree);

std::vector<std::vector<Pt>> orbits(const std::vector<Perm>& gens, Pt degree);
bool is_transitive(const std::vector<Perm>& gens, Pt degree);
bool is_2_transitive(const std::vector<Perm>& gens, Pt degree);

// Largest t with the first t fundamental orbits of sizes n, n-1, ...
int transitivity_degree(const StabChain& chain);

struct BlockSystem {
  bool primitive = false;
  std::vector<Pt> block;  // a nontrivial block through {0, beta} when imprimitive
};

// Minimal-block search by union-find refinement from each pair {0, beta}.
// Throws std::invalid_argument on intransitive input.
BlockSystem minimal_blocks(const std::vector<Perm>& gens, Pt degree);
bool is_primitive(const std::vector<Perm>& gens, Pt degree);

// Subsequence of gens generating the same group, kept only when it grows an
// incremental chain. The returned chain belongs to the full input set.
struct ReducedGenerators {
  std::vector<Perm> generators;
  StabChain chain;
};
ReducedGenerators reduce_generators(const std::vector<Perm>& gens, Pt degree);

struct ClosureResult {
  bool complete = false;
  std::uint64_t order = 0;  // element count when complete
  PermWordSet elements;
};

// Breadth-first product closure of the generated group; aborts once the
// element count would exceed cap. Deterministic for any thread count.
ClosureResult enumerate_group(const std::vector<Perm>& gens, Pt degree, std::uint64_t cap,
                              int threads = 1);

struct ThreeTranspositionReport {
  bool generates = false;     // chain order of <E> matches the expected group order
  bool class_closed = false;  // E is closed under conjugation by E
  bool single_class = false;  // E lies in one conjugacy orbit
  bool orders_ok = false;     // all pairwise products have order 1, 2 or 3
  std::string witness;
};

ThreeTranspositionReport three_transposition_report(const std::vector<Perm>& E,
                                                    std::optional<std::uint64_t> expected_order,
                                                    int threads = 1);

}  // namespace conway
