#include "conway/perm_set.hpp"

#include <cstring>
#include <stdexcept>

#include "conway/util.hpp"

namespace conway {

namespace {
constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;
}

PermWordSet::PermWordSet(Pt degree) : degree_(degree) { table_.assign(64, kEmpty); }

void PermWordSet::reserve(std::size_t n) {
  arena_.reserve(n * degree_);
  std::size_t want = 64;
  while (want < 2 * n) want <<= 1;
  if (want > table_.size()) {
    std::vector<std::uint32_t> old = std::move(table_);
    table_.assign(want, kEmpty);
    for (std::uint32_t idx : old) {
      if (idx == kEmpty) continue;
      auto img = at(idx);
      table_[find_slot(img, mix_bytes(img.data(), img.size_bytes()))] = idx;
    }
  }
}

std::uint32_t PermWordSet::find_slot(std::span<const Pt> images, std::uint64_t hash) const {
  std::size_t mask = table_.size() - 1;
  std::size_t slot = hash & mask;
  while (true) {
    std::uint32_t idx = table_[slot];
    if (idx == kEmpty) return static_cast<std::uint32_t>(slot);
    const Pt* stored = arena_.data() + static_cast<std::size_t>(idx) * degree_;
    if (std::memcmp(stored, images.data(), images.size_bytes()) == 0)
      return static_cast<std::uint32_t>(slot);
    slot = (slot + 1) & mask;
  }
}

void PermWordSet::grow() {
  std::vector<std::uint32_t> old = std::move(table_);
  table_.assign(old.size() * 2, kEmpty);
  for (std::uint32_t idx : old) {
    if (idx == kEmpty) continue;
    auto img = at(idx);
    table_[find_slot(img, mix_bytes(img.data(), img.size_bytes()))] = idx;
  }
}

std::pair<std::uint32_t, bool> PermWordSet::insert(std::span<const Pt> images) {
  if (images.size() != degree_) throw std::invalid_argument("PermWordSet: degree mismatch");
  if (2 * (count_ + 1) > table_.size()) grow();
  std::uint32_t slot = find_slot(images, mix_bytes(images.data(), images.size_bytes()));
  if (table_[slot] != kEmpty) return {table_[slot], false};
  auto idx = static_cast<std::uint32_t>(count_);
  arena_.insert(arena_.end(), images.begin(), images.end());
  table_[slot] = idx;
  ++count_;
  return {idx, true};
}

bool PermWordSet::contains(std::span<const Pt> images) const {
  if (images.size() != degree_) return false;
  std::uint32_t slot = find_slot(images, mix_bytes(images.data(), images.size_bytes()));
  return table_[slot] != kEmpty;
}

std::span<const Pt> PermWordSet::at(std::uint32_t index) const {
  return {arena_.data() + static_cast<std::size_t>(index) * degree_, degree_};
}

Perm PermWordSet::perm_at(std::uint32_t index) const {
  auto img = at(index);
  return Perm(std::vector<Pt>(img.begin(), img.end()));
}

}  // namespace conway
