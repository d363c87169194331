#include <doctest.h>

#include "fcig/arith.hpp"
#include "fcig/errors.hpp"
#include "oracle.hpp"

using namespace fcig;

TEST_SUITE("arith") {

TEST_CASE("primality agrees with trial division") {
  for (u64 n = 0; n < 3000; ++n) CHECK_MESSAGE(is_prime(n) == oracle::is_prime(n), n);
  CHECK(is_prime(1'000'000'007));
  CHECK_FALSE(is_prime(1'000'000'007ULL * 3));
}

TEST_CASE("factorize reconstructs n") {
  for (u64 n = 1; n < 5000; ++n) {
    u64 prod = 1;
    u64 last = 0;
    for (auto [p, e] : factorize(n)) {
      CHECK(oracle::is_prime(p));
      CHECK(p > last);
      last = p;
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
  CHECK(prime_divisors(360) == std::vector<u64>{2, 3, 5});
}

TEST_CASE("modular powers and orders match direct powering") {
  for (u64 mod : {5ULL, 8ULL, 9ULL, 25ULL, 49ULL, 64ULL, 81ULL, 125ULL, 343ULL}) {
    u64 phi = 0;
    for (u64 t = 1; t < mod; ++t) phi += std::gcd(t, mod) == 1;
    for (u64 t = 1; t < mod; ++t) {
      if (std::gcd(t, mod) != 1) continue;
      CHECK(powmod(t, 7, mod) == oracle::power(t, 7, mod));
      CHECK(multiplicative_order(t, mod, phi) == oracle::order_mod(t, mod));
    }
  }
}

TEST_CASE("ipow, valuation, mulmod") {
  CHECK(ipow(5, 4) == 625);
  CHECK(ipow(2, 63) == (1ULL << 63));
  CHECK_THROWS_AS(ipow(2, 64), InvalidArgument);
  CHECK(valuation(48, 2) == 4);
  CHECK(valuation(250, 5) == 3);
  CHECK(valuation(7, 3) == 0);
  const u64 big = (1ULL << 62) + 11;
  CHECK(mulmod(big, big, 1'000'000'007) == static_cast<u64>((static_cast<unsigned __int128>(big) * big) % 1'000'000'007));
}

TEST_CASE("primes congruent to one") {
  CHECK(primes_congruent_one(4, 5, 3) == std::vector<u64>{5, 13, 17});
  CHECK(primes_congruent_one(3, 7, 3) == std::vector<u64>{7, 13, 19});
  CHECK(primes_congruent_one(2, 3, 4) == std::vector<u64>{3, 5, 7, 11});
  for (u64 p : primes_congruent_one(6, 2, 20)) {
    CHECK(oracle::is_prime(p));
    CHECK(p % 6 == 1);
  }
}

TEST_CASE("least unit of exact order") {
  CHECK(least_unit_of_order(4, 5) == 2);
  CHECK(least_unit_of_order(4, 13) == 5);
  CHECK(least_unit_of_order(3, 7) == 2);
  CHECK(least_unit_of_order(2, 11) == 10);
  for (u64 p : {7ULL, 13ULL, 19ULL, 31ULL, 37ULL})
    for (u64 m = 1; m < p; ++m) {
      if ((p - 1) % m) continue;
      const u64 u = least_unit_of_order(m, p);
      CHECK(oracle::order_mod(u, p) == m);
      for (u64 v = 1; v < u; ++v) CHECK(oracle::order_mod(v, p) != m);
    }
  CHECK_THROWS_AS(least_unit_of_order(4, 7), InvalidArgument);
}

}
