#ifndef BRAUERQ_ARITH_HPP
#define BRAUERQ_ARITH_HPP

#include <cstdint>
#include <vector>

namespace brauerq {

using u64 = std::uint64_t;

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;  // a, b < m < 2^63, no overflow
  return s >= m ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo prime m; a must be nonzero mod m.
u64 inv_mod(u64 a, u64 m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(u64 n);

/// All primes p with 2 <= p <= bound, ascending.
std::vector<u64> primes_up_to(u64 bound);

/// Euler's totient by trial division.
u64 euler_phi(u64 n);

bool is_squarefree(u64 n);

}  // namespace brauerq

#endif  // BRAUERQ_ARITH_HPP
