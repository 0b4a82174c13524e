#pragma once

#include <cstddef>
#include <cstdint>

namespace conway {

// Exact binomial coefficient; throws std::overflow_error if the result
// does not fit in 64 bits.
std::uint64_t binom(std::uint64_t n, std::uint64_t k);

// Hash of a raw byte range, used to key permutation image words.
std::uint64_t mix_bytes(const void* data, std::size_t len);

}  // namespace conway
