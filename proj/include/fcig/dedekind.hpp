#pragma once

// Periodic Dedekind groups D = Q x A with Q trivial or Q8 and A abelian of
// finite rank in every prime, plus their finite truncations.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcig/abelian.hpp"
#include "fcig/cardinal.hpp"
#include "fcig/cayley.hpp"
#include "fcig/quaternion.hpp"

namespace fcig {

/// Every prime p = 1 (mod m) with p >= min_prime contributes one summand C_p.
struct TailRule {
  u64 m = 2;
  u64 min_prime = 2;

  std::vector<u64> primes(std::size_t count) const { return primes_congruent_one(m, min_prime, count); }
  bool contains(u64 p) const { return p >= min_prime && is_prime(p) && p % m == 1 % m; }

  friend bool operator==(const TailRule&, const TailRule&) = default;
};

struct DedekindSpec {
  bool has_q8 = false;
  std::map<u64, AbelianPComponent> components;
  std::optional<TailRule> tail;

  bool is_infinite() const;
  /// Primes of D other than tail primes, including 2 when Q8 is present.
  std::vector<u64> explicit_primes() const;
  /// |D_p|, with Q8 counted in D_2 and each tail prime contributing C_p.
  Cardinal sylow_order(u64 p) const;
  /// Prüfer rank of D_2 (Q8 has rank 2).
  int rank_2() const;
  const AbelianPComponent* component(u64 p) const;
};

/// Returns the violated constraints; empty means the spec is a Dedekind group.
std::vector<std::string> validate_spec(const DedekindSpec& spec);

struct TruncationParams {
  int quasicyclic_depth = 1;
  std::size_t tail_count = 0;

  friend bool operator==(const TruncationParams&, const TruncationParams&) = default;
};

struct DedekindElement {
  Q8Element q8;
  std::map<u64, AbelianPVector> parts;

  friend bool operator==(const DedekindElement&, const DedekindElement&) = default;
};

/// A finite truncation of a DedekindSpec.
///
/// Elements are encoded as mixed-radix integers: the Q8 index (radix 8, or
/// radix 1 without Q8) followed by one digit per cyclic summand in prime
/// order. Index 0 is the identity.
class DedekindInstance {
 public:
  struct Part {
    FiniteAbelianP group;
    bool from_tail = false;
    std::vector<bool> quasicyclic;  // per summand: came from a Z(p^∞)
  };

  DedekindInstance(const DedekindSpec& spec, TruncationParams params);

  const DedekindSpec& spec() const { return spec_; }
  const TruncationParams& params() const { return params_; }
  bool has_q8() const { return spec_.has_q8; }
  const std::vector<Part>& parts() const { return parts_; }
  const Part* part(u64 p) const;
  std::size_t order() const { return order_; }
  /// Number of abelian summands, i.e. digits after the Q8 digit.
  std::size_t summand_count() const { return moduli_.size(); }
  u64 summand_modulus(std::size_t s) const { return moduli_[s]; }

  std::size_t encode(const DedekindElement& x) const;
  DedekindElement decode(std::size_t index) const;
  DedekindElement identity() const { return decode(0); }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  DedekindElement multiply(const DedekindElement& a, const DedekindElement& b) const;
  std::size_t element_order(std::size_t a) const;
  u64 exponent() const;

  /// Z(D): {±1} x A when Q8 is present, everything otherwise.
  std::vector<std::size_t> center_elements() const;

  /// Index of the image of x under the canonical embedding into a deeper
  /// truncation of the same spec.
  std::size_t embed_into(const DedekindInstance& deeper, std::size_t x) const;

  CayleyGroup to_cayley(std::size_t cap = default_order_cap()) const;

 private:
  std::size_t q8_radix() const { return spec_.has_q8 ? 8 : 1; }

  DedekindSpec spec_;
  TruncationParams params_;
  std::vector<Part> parts_;
  std::vector<u64> moduli_;  // per summand, in part order
  std::size_t order_ = 1;
};

/// Validates the spec, then builds the truncation. Throws InvalidSpec or
/// ResourceLimit.
DedekindInstance truncate(const DedekindSpec& spec, TruncationParams params,
                          std::size_t cap = default_order_cap());

}  // namespace fcig
