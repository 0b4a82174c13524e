#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace conway {

// Point of the ambient set, a dense integer in [0, n).
using Pt = std::uint16_t;

/// A permutation of {0..n-1} stored as its image sequence. Points act on
/// the right and composition reads left to right: (p * q) maps x to
/// q[p[x]].  Values are immutable after construction.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Pt> images);  // throws if not a bijection

  static Perm identity(Pt degree);
  static Perm transposition(Pt degree, Pt a, Pt b);
  static Perm from_cycles(Pt degree, const std::vector<std::vector<Pt>>& cycles);

  Pt degree() const { return static_cast<Pt>(images_.size()); }
  Pt operator[](Pt x) const { return images_[x]; }
  std::span<const Pt> images() const { return images_; }

  bool is_identity() const;
  Perm operator*(const Perm& q) const;  // apply *this, then q
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g^-1 * (*this) * g
  std::uint64_t order() const;              // lcm of cycle lengths

  std::vector<Pt> support() const;
  std::vector<Pt> fixed_points() const;
  std::vector<std::vector<Pt>> cycles() const;  // nontrivial cycles, least point first

  // "(0 1)(2 3)"; the identity renders as "()".
  std::string cycle_string() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<Pt> images_;
};

// Degree-(n-1) copy of a permutation fixing `fixed`, with the remaining
// points relabeled downward to stay dense.
Perm restrict_away(const Perm& p, Pt fixed);

}  // namespace conway
