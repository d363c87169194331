#pragma once

// Cyclic extensions G = <g, D> with g^-1 d g = φ(d) and g^m = n, and the
// classifier for infinite locally finite FCI-groups.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcig/cardinal.hpp"
#include "fcig/cayley.hpp"
#include "fcig/dedekind.hpp"
#include "fcig/power_aut.hpp"

namespace fcig {

/// The element n = g^m, described independently of any truncation depth.
/// Quasicyclic coordinates are Prüfer fractions num / p^den_exp.
struct FiberElement {
  struct Part {
    std::vector<u64> cyclic;
    std::vector<std::pair<u64, int>> quasicyclic;  // (num, den_exp)
    friend bool operator==(const Part&, const Part&) = default;
  };

  Q8Element q8;
  std::map<u64, Part> parts;

  bool is_identity() const;
  /// Smallest quasicyclic depth whose truncation contains this element.
  int required_depth() const;
  /// Violations of the shape constraints against D.
  std::vector<std::string> violations(const DedekindSpec& d) const;
  /// The element inside a truncation deep enough to contain it.
  DedekindElement in(const DedekindInstance& inst) const;
};

struct FciGroupSpec {
  DedekindSpec dedekind;
  PowerAutSpec phi;
  u64 m = 1;
  FiberElement n;
};

std::vector<std::string> validate_extension(const FciGroupSpec& spec);

struct Certificate {
  u64 m = 0;
  std::vector<u64> pi0, pi1;
  Cardinal M;
  Cardinal bound;          // m * M * prod |D_p|, also the BCI constant
  u64 omega1_d2 = 1;       // |Ω₁(D_2)|, the sharper 2-part factor
};

struct Classification {
  enum class Kind { Dedekind, Fci, NotFci, Rejected };
  Kind kind = Kind::Rejected;
  std::optional<Certificate> certificate;
  std::string reason;
};

std::string to_string(Classification::Kind kind);

/// Requires a spec with no validation violations (throws InvalidSpec).
Classification classify(const FciGroupSpec& spec);

/// m * M * prod_{p in π₀ ∪ π₁} |D_p|. Throws InvalidArgument unless the spec
/// classifies as an FCI case.
Cardinal global_bound(const FciGroupSpec& spec);

/// g^i d with 0 <= i < m.
struct ExtensionElement {
  u64 i = 0;
  DedekindElement d;
  friend bool operator==(const ExtensionElement&, const ExtensionElement&) = default;
};

/// A finite truncation of <g, D>: elements i * |D| + d for 0 <= i < m.
class ExtensionTruncation {
 public:
  ExtensionTruncation(const FciGroupSpec& spec, TruncationParams params, std::size_t cap = default_order_cap());

  const DedekindInstance& base() const { return inst_; }
  u64 m() const { return m_; }
  std::size_t order() const { return m_ * d_order_; }
  std::size_t d_order() const { return d_order_; }
  u64 truncated_phi_order() const { return phi_.order(); }
  /// The truncated φ keeps its full order m.
  bool faithful() const { return phi_.order() == m_; }
  std::size_t fiber() const { return fiber_; }

  std::size_t encode(const ExtensionElement& x) const;
  ExtensionElement decode(std::size_t index) const;

  /// (i, d)(j, e) = (r, n^q φ^j(d) e) where i + j = q m + r.
  std::size_t multiply(std::size_t x, std::size_t y) const;
  ExtensionElement multiply(const ExtensionElement& x, const ExtensionElement& y) const;
  /// Solves x y = 1 for y component-wise.
  std::size_t inverse(std::size_t x) const;

  CayleyGroup to_cayley() const;

 private:
  std::size_t phi_pow(u64 j, std::size_t d) const { return phi_table_[j * d_order_ + d]; }

  DedekindInstance inst_;
  TruncatedPowerAut phi_;
  u64 m_;
  std::size_t d_order_;
  std::size_t fiber_ = 0;
  std::size_t cap_;
  std::vector<std::size_t> phi_table_;  // φ^j(d), j < m
};

CayleyGroup truncate_group(const FciGroupSpec& spec, TruncationParams params,
                           std::size_t cap = default_order_cap());

/// Centralizer profile over the non-normal cyclic subgroups. Witnesses are
/// the least element indices attaining each maximum.
struct BciProfile {
  bool dedekind = false;  // no non-normal cyclic subgroup
  std::size_t non_normal_count = 0;
  std::size_t max_centralizer_order = 0;
  std::size_t max_index = 0;
  CayleyGroup::Index witness_centralizer = 0;
  CayleyGroup::Index witness_index = 0;
};
BciProfile empirical_bci(const CayleyGroup& g);

/// Everything measured on one truncation of an extension spec.
struct TruncationEvidence {
  TruncationParams params;
  bool built = false;
  std::string skipped_reason;  // set when !built
  std::size_t group_order = 0;
  std::size_t d_order = 0;
  bool faithful = false;
  u64 truncated_phi_order = 0;
  BciProfile bci;
  bool kernel_set_is_d = false;
  bool kernel_set_is_subgroup = false;
  bool quotient_cyclic_of_order_m = false;
  bool metabelian = false;
  bool d_elements_normal = false;  // every (0, d) generates a normal subgroup
  bool g_power_is_fiber = false;   // g^m = n
};

TruncationEvidence inspect_truncation(const FciGroupSpec& spec, TruncationParams params,
                                      std::size_t cap = default_order_cap());

/// Truncation parameters worth examining for a spec: depths are collapsed to
/// 1 when D has no quasicyclic summand, tail counts to 0 without a tail, and
/// depths too shallow to contain n are dropped.
std::vector<TruncationParams> truncation_grid(const FciGroupSpec& spec, const std::vector<int>& depths,
                                              const std::vector<std::size_t>& tail_counts);

}  // namespace fcig
