#pragma once

#include <cstdint>

namespace conway {

enum class Sign : std::uint8_t { plus, minus };

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// F_2^{2m} carrying the split quadratic map theta(u) = u e u^T for
/// e = [[0, I], [0, 0]] and its polar alternating form
/// phi(u, v) = u (e + e^T) v^T.  Vectors are 2m-bit words; coordinate i is
/// bit i, with the first m bits paired against the last m.
class FormSpace {
 public:
  explicit FormSpace(int m);  // throws for m < 2 or 2m > 30

  int m() const { return m_; }
  int dim() const { return 2 * m_; }
  std::uint32_t vector_count() const { return 1u << (2 * m_); }

  int theta(std::uint32_t u) const;
  int phi(std::uint32_t u, std::uint32_t v) const;

  // Non-degenerate quadratic form of the requested type polarizing to phi.
  // plus is theta itself; minus flips the type on one hyperbolic pair.
  int quad(std::uint32_t u, Sign type) const;

 private:
  int m_;
  std::uint32_t low_mask_;
};

// |Sp_2m(2)| and |O^eps_2m(2)|; throw std::overflow_error past 64 bits.
std::uint64_t sp_order(int m);
std::uint64_t o_order(int m, Sign type);

}  // namespace conway
