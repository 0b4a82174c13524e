#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "conway/perm.hpp"

namespace conway {

/// Append-only set of permutations of one degree. Image words live in a
/// contiguous arena; lookup is open addressing over the word bytes.
/// Insertion indices are stable, so iteration order is the insertion order.
class PermWordSet {
 public:
  explicit PermWordSet(Pt degree);

  Pt degree() const { return degree_; }
  std::size_t size() const { return count_; }

  // Returns {index, inserted}.
  std::pair<std::uint32_t, bool> insert(std::span<const Pt> images);
  bool contains(std::span<const Pt> images) const;
  std::span<const Pt> at(std::uint32_t index) const;
  Perm perm_at(std::uint32_t index) const;
  void reserve(std::size_t n);

 private:
  std::uint32_t find_slot(std::span<const Pt> images, std::uint64_t hash) const;
  void grow();

  Pt degree_;
  std::size_t count_ = 0;
  std::vector<Pt> arena_;
  std::vector<std::uint32_t> table_;  // 0xFFFFFFFF marks an empty slot
};

}  // namespace conway
