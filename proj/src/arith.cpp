#include "fcig/arith.hpp"

#include <limits>
#include <numeric>

#include "fcig/errors.hpp"

namespace fcig {

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

u64 mulmod(u64 a, u64 b, u64 mod) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % mod);
}

u64 powmod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u64 result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

u64 ipow(u64 p, int e) {
  if (e < 0) throw InvalidArgument("ipow: negative exponent");
  u64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<u64>::max() / p)
      throw InvalidArgument("ipow: overflow computing prime power");
    r *= p;
  }
  return r;
}

int valuation(u64 x, u64 p) {
  if (x == 0) throw InvalidArgument("valuation of zero");
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

u64 multiplicative_order(u64 t, u64 mod, u64 group_order) {
  if (std::gcd(t % mod, mod) != 1) throw InvalidArgument("multiplicative_order: not a unit");
  if (mod == 1) return 1;
  u64 order = group_order;
  for (auto [q, e] : factorize(group_order)) {
    for (int i = 0; i < e; ++i) {
      if (powmod(t, order / q, mod) == 1)
        order /= q;
      else
        break;
    }
  }
  return order;
}

std::vector<u64> primes_congruent_one(u64 m, u64 min_prime, std::size_t count) {
  std::vector<u64> out;
  if (m == 0) throw InvalidArgument("primes_congruent_one: m = 0");
  u64 start = min_prime < 2 ? 2 : min_prime;
  // smallest candidate >= start with candidate = 1 (mod m)
  u64 c = start + ((m + 1 - start % m) % m);
  if (m == 1) c = start;
  for (; out.size() < count; c += m)
    if (is_prime(c)) out.push_back(c);
  return out;
}

u64 least_unit_of_order(u64 m, u64 p) {
  if (!is_prime(p)) throw InvalidArgument("least_unit_of_order: modulus not prime");
  if ((p - 1) % m != 0) throw InvalidArgument("least_unit_of_order: m does not divide p - 1");
  for (u64 t = 1; t < p; ++t)
    if (multiplicative_order(t, p, p - 1) == m) return t;
  throw InternalError("least_unit_of_order: no unit found");
}

}  // namespace fcig
