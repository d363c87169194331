#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fcig {

using u64 = std::uint64_t;

bool is_prime(u64 n);

// Prime factorisation by trial division, ascending primes.
std::vector<std::pair<u64, int>> factorize(u64 n);

std::vector<u64> prime_divisors(u64 n);

u64 mulmod(u64 a, u64 b, u64 mod);
u64 powmod(u64 base, u64 exp, u64 mod);

// p^e, throwing InvalidArgument on 64-bit overflow.
u64 ipow(u64 p, int e);

// Largest v with p^v | x; x must be non-zero.
int valuation(u64 x, u64 p);

// Multiplicative order of t modulo mod, given a multiple `group_order` of it.
u64 multiplicative_order(u64 t, u64 mod, u64 group_order);

// Primes p >= min_prime with p = 1 (mod m), ascending, first `count` of them.
std::vector<u64> primes_congruent_one(u64 m, u64 min_prime, std::size_t count);

// Least positive integer of multiplicative order exactly m modulo the prime p.
// Requires m | p - 1.
u64 least_unit_of_order(u64 m, u64 p);

}  // namespace fcig
