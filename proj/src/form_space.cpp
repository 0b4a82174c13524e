#include "conway/form_space.hpp"

#include <bit>
#include <stdexcept>

namespace conway {

FormSpace::FormSpace(int m) : m_(m) {
  if (m < 2) throw std::invalid_argument("FormSpace: m must be at least 2");
  if (2 * m > 30) throw std::invalid_argument("FormSpace: dimension too large");
  low_mask_ = (1u << m) - 1;
}

int FormSpace::theta(std::uint32_t u) const {
  return std::popcount(u & (u >> m_) & low_mask_) & 1;
}

int FormSpace::phi(std::uint32_t u, std::uint32_t v) const {
  std::uint32_t cross = (u & (v >> m_) & low_mask_) ^ (v & (u >> m_) & low_mask_);
  return std::popcount(cross) & 1;
}

int FormSpace::quad(std::uint32_t u, Sign type) const {
  int q = theta(u);
  if (type == Sign::minus) {
    // Add the linear functional phi(., w) for w with theta(w) = 1; this
    // translates the form by w and swaps the type.
    q ^= static_cast<int>((u >> (m_ - 1)) & 1u);
    q ^= static_cast<int>((u >> (2 * m_ - 1)) & 1u);
  }
  return q;
}

namespace {

std::uint64_t checked(unsigned __int128 v) {
  if (v > UINT64_MAX) throw std::overflow_error("group order exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t sp_order(int m) {
  if (m < 1) throw std::invalid_argument("sp_order: m must be positive");
  unsigned __int128 acc = static_cast<unsigned __int128>(1) << (m * m);
  for (int i = 1; i <= m; ++i) {
    acc *= (std::uint64_t{1} << (2 * i)) - 1;
    checked(acc);
  }
  return checked(acc);
}

std::uint64_t o_order(int m, Sign type) {
  if (m < 1) throw std::invalid_argument("o_order: m must be positive");
  unsigned __int128 acc = static_cast<unsigned __int128>(2) << (m * (m - 1));
  acc *= (std::uint64_t{1} << m) + (type == Sign::plus ? -1 : 1);
  for (int i = 1; i <= m - 1; ++i) {
    acc *= (std::uint64_t{1} << (2 * i)) - 1;
    checked(acc);
  }
  return checked(acc);
}

}  // namespace conway
