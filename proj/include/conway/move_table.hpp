#pragma once

#include <span>
#include <string>
#include <vector>

#include "conway/design.hpp"
#include "conway/perm.hpp"

namespace conway {

/// All elementary moves of a supersimple design, built eagerly. The move of
/// {a,b} swaps a with b and each completing pair of the blocks through
/// {a,b}; the move of {a,a} is the identity. distinct_moves() is the
/// deduplicated, sorted set of non-identity moves.
class MoveTable {
 public:
  MoveTable(const Design& d, const CollinearityIndex& idx);

  Pt degree() const { return n_; }
  int lambda() const { return lambda_; }
  const Perm& move(Pt a, Pt b) const { return table_[std::size_t{a} * n_ + b]; }
  const std::vector<Perm>& distinct_moves() const { return distinct_; }

  // Left-to-right product of consecutive moves along a point path; a
  // singleton path yields the identity.
  Perm move_sequence(std::span<const Pt> points) const;

 private:
  Pt n_;
  int lambda_;
  std::vector<Perm> table_;
  std::vector<Perm> distinct_;
};

struct CheckResult {
  bool ok = true;
  std::size_t checked = 0;
  std::string witness;
};

// Both pairings of every block yield the same move.
CheckResult check_line_move_identity(const Design& d, const MoveTable& t, int threads = 1);

// Conjugating the move of {x,y} by the move of {y,z} yields the move of
// {x,y} when x is in the pair closure of {y,z}, and of {x,z} otherwise.
CheckResult check_move_conjugation_rule(const CollinearityIndex& idx, const MoveTable& t,
                                        int threads = 1);

// The product of the moves of {x,y} and {y,z} has order 2 or 3 according to
// the same closure test, and the path z,x,y,z reproduces the move of {x,y}
// outside the closure.
CheckResult check_braid_orders(const CollinearityIndex& idx, const MoveTable& t, int threads = 1);

// Moves conjugate covariantly: the move of {x,y} conjugated by any move g
// equals the move of the image pair.
CheckResult check_conjugation_covariance(const MoveTable& t, int threads = 1);

}  // namespace conway
