#include "conway/util.hpp"

#include <stdexcept>

namespace conway {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) throw std::overflow_error("binom: result exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t mix_bytes(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (static_cast<std::uint64_t>(len) << 1);
  while (len >= 8) {
    std::uint64_t w;
    __builtin_memcpy(&w, p, 8);
    h = (h ^ w) * 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    p += 8;
    len -= 8;
  }
  std::uint64_t tail = 0;
  for (std::size_t i = 0; i < len; ++i) tail |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  h = (h ^ tail) * 0xc4ceb9fe1a85ec53ull;
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 29;
  return h;
}

}  // namespace conway
