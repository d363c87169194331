#pragma once

// Power automorphisms of a periodic Dedekind group, stored prime by prime.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "fcig/abelian.hpp"
#include "fcig/cardinal.hpp"
#include "fcig/dedekind.hpp"

namespace fcig {

struct IdentityUnit {
  friend bool operator==(IdentityUnit, IdentityUnit) = default;
};
struct InversionUnit {
  friend bool operator==(InversionUnit, InversionUnit) = default;
};
/// Torsion p-adic unit (p odd) named by its residue mod p.
struct TeichmullerUnit {
  u64 t0 = 1;
  friend bool operator==(TeichmullerUnit, TeichmullerUnit) = default;
};

/// How φ_p acts on D_p: a -> a^t for the labelled unit t.
using UnitLabel = std::variant<IdentityUnit, InversionUnit, TeichmullerUnit, UnitResidue>;

std::string to_string(const UnitLabel& label);

struct PowerAutSpec {
  std::map<u64, UnitLabel> per_prime;
  // Tail primes p get the least positive integer of order exactly m mod p.
  bool tail_rule_least_order_m = false;
};

std::vector<std::string> validate_phi(const PowerAutSpec& phi, const DedekindSpec& d);

/// The unit acting on D_p, read modulo p^depth. depth must not exceed the
/// exponent of a finite component.
u64 unit_at_depth(const UnitLabel& label, u64 p, int depth);

/// o(φ_p) on the given component.
u64 component_order(const UnitLabel& label, const AbelianPComponent& component);

/// Label used for prime p, defaulting to the identity on a Q8-only 2-part.
UnitLabel label_for(const PowerAutSpec& phi, const DedekindSpec& d, u64 p);

/// m = o(φ) = lcm over primes (the tail contributes its rule's m).
u64 phi_order(const PowerAutSpec& phi, const DedekindSpec& d);

struct PrimeSets {
  std::vector<u64> pi0;  // o(φ_p) < m
  std::vector<u64> pi1;  // o(φ_p) = m, p > 2, p != 1 mod m
};
PrimeSets pi0_pi1(const PowerAutSpec& phi, const DedekindSpec& d, u64 m);

/// C_D(φ^k) finite for every k in 1..m-1.
bool finiteness_check(const PowerAutSpec& phi, const DedekindSpec& d);

/// |D_2| when finite, 2^rank(D_2) otherwise.
Cardinal M_value(const DedekindSpec& d);

/// |Ω₁(D_2)|, the value the centralizer argument actually needs.
u64 omega1_d2_order(const DedekindSpec& d);

/// M * prod_{p in π₀ ∪ π₁} |D_p|, infinite when the finiteness check fails.
Cardinal centralizer_bound(const PowerAutSpec& phi, const DedekindSpec& d);

struct CentralizerFactor {
  u64 p = 0;  // 0 stands for the whole tail
  Cardinal order;
};

/// |C_{D_p}(φ_p^k)| for every explicit prime, plus one entry for the tail.
std::vector<CentralizerFactor> centralizer_factors(const PowerAutSpec& phi, const DedekindSpec& d, u64 k);

/// |C_D(φ^k)| for 1 <= k <= m-1.
Cardinal symbolic_centralizer_order(const PowerAutSpec& phi, const DedekindSpec& d, u64 k);

/// φ restricted to a finite truncation, as one multiplier per summand.
class TruncatedPowerAut {
 public:
  TruncatedPowerAut(const PowerAutSpec& phi, const DedekindInstance& inst);

  std::size_t apply(std::size_t x) const;
  std::size_t apply_power(std::size_t x, u64 k) const;
  /// Multiplicative order of φ on the truncation.
  u64 order() const { return order_; }
  /// Unit acting on each truncated Sylow part, modulo its exponent.
  const std::map<u64, UnitResidue>& units() const { return units_; }

 private:
  const DedekindInstance* inst_;
  std::vector<u64> multipliers_;  // per summand
  std::map<u64, UnitResidue> units_;
  u64 order_ = 1;
};

/// φ(x) on a truncation. Throws InvalidSpec if a prime of x has no label.
DedekindElement apply(const PowerAutSpec& phi, const DedekindElement& x, const DedekindInstance& inst);

}  // namespace fcig
