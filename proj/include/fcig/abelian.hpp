#pragma once

// Abelian p-groups, units of Z/p^n Z and truncated p-adic torsion units.

#include <cstdint>
#include <string>
#include <vector>

#include "fcig/arith.hpp"
#include "fcig/cardinal.hpp"

namespace fcig {

/// A finite abelian p-group given as a list of cyclic summands C_{p^e}.
///
/// The exponent list need not be sorted. Truncations list the cyclic
/// summands of the source component first and the truncated quasicyclic
/// summands after them.
struct FiniteAbelianP {
  u64 p = 2;
  std::vector<int> exponents;

  int rank() const { return static_cast<int>(exponents.size()); }
  int max_exponent() const;
  u64 exponent() const { return ipow(p, max_exponent()); }
  u64 order() const;
  u64 summand_modulus(std::size_t i) const { return ipow(p, exponents.at(i)); }

  friend bool operator==(const FiniteAbelianP&, const FiniteAbelianP&) = default;
};

/// Symbolic abelian p-group of finite rank: ⊕ C_{p^{e_i}} ⊕ Z(p^∞)^q.
struct AbelianPComponent {
  u64 p = 2;
  std::vector<int> cyclic_exponents;  // non-increasing, positive
  int quasicyclic_count = 0;

  // Throws InvalidArgument if the invariants fail.
  static AbelianPComponent make(u64 p, std::vector<int> cyclic_exponents, int quasicyclic_count = 0);

  std::vector<std::string> violations() const;

  int rank() const { return static_cast<int>(cyclic_exponents.size()) + quasicyclic_count; }
  bool is_finite() const { return quasicyclic_count == 0; }
  bool is_elementary() const;
  Cardinal order() const;
  Cardinal exponent() const;

  // Each Z(p^∞) becomes C_{p^depth}.
  FiniteAbelianP truncate(int depth) const;

  friend bool operator==(const AbelianPComponent&, const AbelianPComponent&) = default;
};

/// A unit of Z/p^n Z.
struct UnitResidue {
  u64 p = 2;
  int modulus_exponent = 1;
  u64 value = 1;

  // Reduces value mod p^n; throws InvalidArgument unless p is prime, n >= 1
  // and the value is coprime to p.
  static UnitResidue make(u64 p, int modulus_exponent, u64 value);

  u64 modulus() const { return ipow(p, modulus_exponent); }
  // The same unit read modulo p^k for k <= n.
  UnitResidue reduce(int k) const;

  friend bool operator==(const UnitResidue&, const UnitResidue&) = default;
};

/// A concrete element of a finite abelian p-group.
struct AbelianPVector {
  FiniteAbelianP shape;
  std::vector<u64> coords;  // coords[i] in [0, p^{e_i})

  static AbelianPVector zero(const FiniteAbelianP& shape);

  AbelianPVector operator+(const AbelianPVector& o) const;
  AbelianPVector operator-() const;
  // a -> a^s in multiplicative notation, i.e. coordinate-wise scaling.
  AbelianPVector scaled(u64 s) const;
  bool is_zero() const;
  u64 order() const;

  friend bool operator==(const AbelianPVector&, const AbelianPVector&) = default;
};

u64 euler_phi_prime_power(u64 p, int n);

/// Smallest k >= 1 with t^k = 1 mod p^n.
u64 unit_order(const UnitResidue& t);

/// Unique unit u mod p^depth with u = t0 (mod p) and order prime to p,
/// reached by iterating x -> x^p until it stabilises. p must be odd.
UnitResidue teichmuller_lift(u64 t0, u64 p, int depth);

/// |{a in A : a^{t^k} = a}| = prod_i gcd(t^k - 1, p^{e_i}).
/// The unit must be given modulo p^n with n >= exp(A); it acts on smaller
/// summands by reduction.
u64 fixed_subgroup_order(const FiniteAbelianP& a, const UnitResidue& t, u64 k);

/// |Ω₁(A)| = p^{rank A}.
u64 omega1_order(const FiniteAbelianP& a);

/// All abelian p-groups of order p^n for 1 <= n <= max_total_exponent, as
/// partitions in non-increasing order.
std::vector<FiniteAbelianP> abelian_p_groups(u64 p, int max_total_exponent);

}  // namespace fcig
