#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "conway/form_space.hpp"
#include "conway/perm.hpp"

namespace conway {

using Block = std::array<Pt, 4>;
using Triple = std::array<Pt, 3>;

/// Set of 3-subsets of {0..n-1} with O(1) membership via a rank-indexed
/// bitset. Inserted triples are also kept as a list in insertion order.
class TripleSet {
 public:
  explicit TripleSet(Pt n);

  Pt n() const { return n_; }
  std::size_t size() const { return list_.size(); }
  bool insert(Pt x, Pt y, Pt z);  // unordered; returns true when new
  bool contains(Pt x, Pt y, Pt z) const;
  const std::vector<Triple>& triples() const { return list_; }

 private:
  std::size_t rank(Pt x, Pt y, Pt z) const;  // requires x < y < z

  Pt n_;
  std::vector<std::uint64_t> bits_;
  std::vector<Triple> list_;
};

/// A point set of size n with a set of 4-element blocks. Each block is
/// stored sorted and the block list is sorted; duplicates are rejected.
struct Design {
  std::string name;
  Pt n = 0;
  std::vector<Block> blocks;

  bool has_block(Block b) const;  // b need not be sorted

  // Membership set over packed block keys, built by make_design.
  std::unordered_set<std::uint64_t> block_keys;
};

std::uint64_t block_key(Block b);  // sorts and packs

// Canonicalizes and structurally validates; throws std::invalid_argument
// on out-of-range points, repeated points, or duplicate blocks.
Design make_design(std::string name, Pt n, std::vector<Block> blocks);

struct DesignStats {
  bool is_2_design = false;
  int lambda = 0;  // pair coverage when constant
  int lambda_min = 0;
  int lambda_max = 0;
  bool is_supersimple = false;
  bool triangle_delta = false;  // 2-intersecting blocks have their symmetric difference as a block
  std::size_t block_count = 0;
  std::string issue;  // "", "not a 2-design", "degenerate"
};

DesignStats validate(const Design& d);

/// Pair-indexed collinearity data of a supersimple 2-design: the lambda
/// completing pairs of every point pair, and the set C of collinear triples.
class CollinearityIndex {
 public:
  CollinearityIndex(Pt n, int lambda) : n_(n), lambda_(lambda), collinear_(n), completing_(std::size_t{n} * n) {}

  Pt n() const { return n_; }
  int lambda() const { return lambda_; }
  const TripleSet& collinear_triples() const { return collinear_; }
  const std::vector<std::pair<Pt, Pt>>& completing_pairs(Pt a, Pt b) const {
    return completing_[std::size_t{a} * n_ + b];
  }

  // Every point lying on a block through a and b, plus a and b themselves.
  std::vector<Pt> pair_closure(Pt a, Pt b) const;
  bool in_pair_closure(Pt a, Pt b, Pt z) const;

  friend CollinearityIndex collinearity_index(const Design&, const DesignStats&);

 private:
  Pt n_;
  int lambda_;
  TripleSet collinear_;
  std::vector<std::vector<std::pair<Pt, Pt>>> completing_;
};

// Requires a validated supersimple 2-design; throws otherwise.
CollinearityIndex collinearity_index(const Design& d, const DesignStats& s);

// Constructors for the built-in families.
Design boolean_design(int m);                     // 2^m points, zero-sum 4-subsets
Design symplectic_design(int m);                  // 2^{2m} points, zero-sum with zero total theta
Design orthogonal_design(int m, Sign type);       // singular vectors, zero-sum 4-subsets
Design projective_plane_3();                      // points and lines of PG(2,3)

struct BooleanReconstruction {
  bool ok = false;
  int m = 0;
  std::vector<std::uint32_t> coordinates;  // point -> word in F_2^m; base point -> 0
  std::string reason;
};

// Rebuilds the vector-space structure of a supersimple 2-design with
// n = 2*lambda + 2 from its unique fourth points, verifying that the
// induced operation is an elementary abelian group and that the blocks are
// exactly the zero-sum 4-subsets. Throws when n != 2*lambda + 2.
BooleanReconstruction reconstruct_boolean(const Design& d, Pt base);

Design relabel(const Design& d, const Perm& g);

// File format: {"name": string, "n": int, "blocks": [[a,b,c,d], ...]}.
Design design_from_json_text(const std::string& text);
std::string design_to_json_text(const Design& d);  // newline-terminated

}  // namespace conway
