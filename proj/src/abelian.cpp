#include "fcig/abelian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fcig/errors.hpp"

namespace fcig {

int FiniteAbelianP::max_exponent() const {
  return exponents.empty() ? 0 : *std::max_element(exponents.begin(), exponents.end());
}

u64 FiniteAbelianP::order() const {
  int total = std::accumulate(exponents.begin(), exponents.end(), 0);
  return ipow(p, total);
}

AbelianPComponent AbelianPComponent::make(u64 p, std::vector<int> cyclic_exponents,
                                          int quasicyclic_count) {
  AbelianPComponent c{p, std::move(cyclic_exponents), quasicyclic_count};
  auto v = c.violations();
  if (!v.empty()) throw InvalidArgument("AbelianPComponent: " + v.front());
  return c;
}

std::vector<std::string> AbelianPComponent::violations() const {
  std::vector<std::string> out;
  const std::string tag = "component " + std::to_string(p) + ": ";
  if (!is_prime(p)) out.push_back(tag + "p is not prime");
  if (quasicyclic_count < 0) out.push_back(tag + "negative quasicyclic count");
  for (std::size_t i = 0; i < cyclic_exponents.size(); ++i) {
    if (cyclic_exponents[i] <= 0) out.push_back(tag + "cyclic exponents must be positive");
    if (i > 0 && cyclic_exponents[i] > cyclic_exponents[i - 1])
      out.push_back(tag + "cyclic exponents must be non-increasing");
  }
  if (cyclic_exponents.empty() && quasicyclic_count == 0) out.push_back(tag + "component is trivial");
  return out;
}

bool AbelianPComponent::is_elementary() const {
  return quasicyclic_count == 0 &&
         std::all_of(cyclic_exponents.begin(), cyclic_exponents.end(), [](int e) { return e == 1; });
}

Cardinal AbelianPComponent::order() const {
  if (!is_finite()) return Cardinal::infinite();
  return ipow(p, std::accumulate(cyclic_exponents.begin(), cyclic_exponents.end(), 0));
}

Cardinal AbelianPComponent::exponent() const {
  if (!is_finite()) return Cardinal::infinite();
  return cyclic_exponents.empty() ? 1 : ipow(p, cyclic_exponents.front());
}

FiniteAbelianP AbelianPComponent::truncate(int depth) const {
  if (depth < 1) throw InvalidArgument("truncation depth must be >= 1");
  FiniteAbelianP out{p, cyclic_exponents};
  out.exponents.insert(out.exponents.end(), static_cast<std::size_t>(quasicyclic_count), depth);
  return out;
}

UnitResidue UnitResidue::make(u64 p, int modulus_exponent, u64 value) {
  if (!is_prime(p)) throw InvalidArgument("UnitResidue: modulus base is not prime");
  if (modulus_exponent < 1) throw InvalidArgument("UnitResidue: modulus exponent must be >= 1");
  const u64 mod = ipow(p, modulus_exponent);
  value %= mod;
  if (value % p == 0) throw InvalidArgument("UnitResidue: value is not a unit");
  return {p, modulus_exponent, value};
}

UnitResidue UnitResidue::reduce(int k) const {
  if (k < 1 || k > modulus_exponent) throw InvalidArgument("UnitResidue::reduce: bad exponent");
  return {p, k, value % ipow(p, k)};
}

AbelianPVector AbelianPVector::zero(const FiniteAbelianP& shape) {
  return {shape, std::vector<u64>(shape.exponents.size(), 0)};
}

AbelianPVector AbelianPVector::operator+(const AbelianPVector& o) const {
  if (!(shape == o.shape)) throw InvalidArgument("AbelianPVector: shape mismatch");
  AbelianPVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] = (coords[i] + o.coords[i]) % shape.summand_modulus(i);
  return r;
}

AbelianPVector AbelianPVector::operator-() const {
  AbelianPVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const u64 mod = shape.summand_modulus(i);
    r.coords[i] = (mod - coords[i]) % mod;
  }
  return r;
}

AbelianPVector AbelianPVector::scaled(u64 s) const {
  AbelianPVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] = mulmod(coords[i], s, shape.summand_modulus(i));
  return r;
}

bool AbelianPVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](u64 c) { return c == 0; });
}

u64 AbelianPVector::order() const {
  u64 ord = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const u64 mod = shape.summand_modulus(i);
    ord = std::lcm(ord, mod / std::gcd(coords[i], mod));
  }
  return ord;
}

u64 euler_phi_prime_power(u64 p, int n) { return ipow(p, n - 1) * (p - 1); }

u64 unit_order(const UnitResidue& t) {
  if (!is_prime(t.p)) throw InvalidArgument("unit_order: p is not prime");
  if (t.value % t.p == 0) throw InvalidArgument("unit_order: not a unit");
  return multiplicative_order(t.value, t.modulus(), euler_phi_prime_power(t.p, t.modulus_exponent));
}

UnitResidue teichmuller_lift(u64 t0, u64 p, int depth) {
  if (p == 2) throw Unsupported("teichmuller_lift: p = 2 has torsion units +-1 only; use a label");
  UnitResidue x = UnitResidue::make(p, depth, t0 % p);
  const u64 mod = x.modulus();
  for (;;) {
    const u64 next = powmod(x.value, p, mod);
    if (next == x.value) return x;
    x.value = next;
  }
}

u64 fixed_subgroup_order(const FiniteAbelianP& a, const UnitResidue& t, u64 k) {
  if (t.p != a.p) throw InvalidArgument("fixed_subgroup_order: unit and group primes differ");
  if (t.modulus_exponent < a.max_exponent())
    throw InvalidArgument("fixed_subgroup_order: unit modulus smaller than exp(A)");
  const u64 mod = t.modulus();
  const u64 s = powmod(t.value, k, mod);
  // v_p(t^k - 1), capped at the modulus exponent
  const int v = (s == 1) ? t.modulus_exponent : valuation((s + mod - 1) % mod, a.p);
  int total = 0;
  for (int e : a.exponents) total += std::min(v, e);
  return ipow(a.p, total);
}

u64 omega1_order(const FiniteAbelianP& a) { return ipow(a.p, a.rank()); }

std::vector<FiniteAbelianP> abelian_p_groups(u64 p, int max_total_exponent) {
  std::vector<FiniteAbelianP> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back({p, parts});
      return;
    }
    for (int e = std::min(remaining, cap); e >= 1; --e) {
      parts.push_back(e);
      rec(remaining - e, e);
      parts.pop_back();
    }
  };
  for (int n = 1; n <= max_total_exponent; ++n) rec(n, n);
  return out;
}

}  // namespace fcig
