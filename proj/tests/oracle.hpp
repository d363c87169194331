#pragma once

// Deliberately naive reference computations used as test oracles. Nothing in
// here calls into the library's arithmetic.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline u64 power(u64 b, u64 e, u64 mod) {
  u64 r = 1 % mod;
  for (u64 i = 0; i < e; ++i) r = r * b % mod;
  return r;
}

inline u64 order_mod(u64 t, u64 mod) {
  u64 x = t % mod;
  for (u64 k = 1;; ++k) {
    if (x == 1 % mod) return k;
    x = x * t % mod;
  }
}

// The unique u mod p^n with u = t0 mod p and u^(p-1) = 1 mod p^n, by search.
inline u64 torsion_lift(u64 t0, u64 p, int n) {
  u64 mod = 1;
  for (int i = 0; i < n; ++i) mod *= p;
  for (u64 u = t0 % p; u < mod; u += p)
    if (power(u, p - 1, mod) == 1) return u;
  return 0;
}

// |{a in C_{mod_1} x ... : a * s = a}| by enumerating every element.
inline u64 fixed_count(const std::vector<u64>& moduli, u64 s) {
  u64 n = 1;
  for (u64 m : moduli) n *= m;
  u64 count = 0;
  for (u64 idx = 0; idx < n; ++idx) {
    u64 rest = idx;
    bool fixed = true;
    for (u64 m : moduli) {
      const u64 c = rest % m;
      rest /= m;
      if (c * (s % m) % m != c) fixed = false;
    }
    count += fixed;
  }
  return count;
}

// Table-level helpers operating on a raw multiplication table.
template <class Table>
std::vector<u64> centralizer_orders(const Table& mul, std::size_t n) {
  std::vector<u64> out(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out[x] += mul(x, y) == mul(y, x);
  return out;
}

}  // namespace oracle
